#pragma once

// Collected results of exhaustive identity checks.
//
// Text form, one line per item:
//   AXIOM <name> PASS|FAIL [witness=(<label>,...)]
//   HYPOTHESIS <name> TRUE|FALSE
//   INFO <key> <value>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace weakore {

struct Witness {
    std::vector<std::size_t> indices;  // sort key
    std::vector<std::string> labels;   // printed tuple
    std::string lhs;
    std::string rhs;
};

struct ReportEntry {
    std::string name;
    bool passed = true;
    std::vector<Witness> failures;  // sorted by indices once finalized
};

class AxiomReport {
public:
    /// Registers `name` (passing unless a failure is recorded).
    void touch(const std::string& name);
    void fail(const std::string& name, Witness w);
    /// touch + fail-if-not-ok in one call.
    void check(const std::string& name, bool ok, Witness w = {});

    void hypothesis(const std::string& name, bool holds);
    void info(const std::string& key, const std::string& value);

    /// Appends another report; entry names get `prefix` prepended.
    void merge(const AxiomReport& other, const std::string& prefix = "");

    bool passed() const;
    bool passed(const std::string& name) const;
    bool has(const std::string& name) const { return find(name) != nullptr; }
    const ReportEntry* find(const std::string& name) const;
    /// Value of a recorded hypothesis; throws if it was never recorded.
    bool hypothesis_holds(const std::string& name) const;
    std::vector<std::string> failed_names() const;

    const std::vector<ReportEntry>& entries() const { return entries_; }
    const std::vector<std::pair<std::string, bool>>& hypotheses() const { return hypotheses_; }
    const std::vector<std::pair<std::string, std::string>>& infos() const { return infos_; }

    std::string to_text() const;

private:
    ReportEntry& entry(const std::string& name);

    std::vector<ReportEntry> entries_;
    std::vector<std::pair<std::string, bool>> hypotheses_;
    std::vector<std::pair<std::string, std::string>> infos_;
};

}  // namespace weakore
