#include "weakore/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "weakore/errors.hpp"

namespace weakore {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::UnitFails: return "UnitFails";
        case ErrorKind::NotCoassociative: return "NotCoassociative";
        case ErrorKind::CounitFails: return "CounitFails";
        case ErrorKind::ZeroDimension: return "ZeroDimension";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
        case ErrorKind::NotAutomorphism: return "NotAutomorphism";
        case ErrorKind::NotDerivation: return "NotDerivation";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotCentral: return "NotCentral";
        case ErrorKind::NotGrouplike: return "NotGrouplike";
        case ErrorKind::InvalidGroupCharacter: return "InvalidGroupCharacter";
        case ErrorKind::ZeroScale: return "ZeroScale";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ConditionsFailed: return "ConditionsFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

AlgebraError::AlgebraError(ErrorKind kind, const std::string& message,
                           std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

ReportEntry& AxiomReport::entry(const std::string& name) {
    for (auto& e : entries_)
        if (e.name == name) return e;
    entries_.push_back(ReportEntry{name, true, {}});
    return entries_.back();
}

void AxiomReport::touch(const std::string& name) { entry(name); }

void AxiomReport::fail(const std::string& name, Witness w) {
    auto& e = entry(name);
    e.passed = false;
    auto pos = std::upper_bound(e.failures.begin(), e.failures.end(), w,
                                [](const Witness& a, const Witness& b) { return a.indices < b.indices; });
    e.failures.insert(pos, std::move(w));
}

void AxiomReport::check(const std::string& name, bool ok, Witness w) {
    if (ok)
        touch(name);
    else
        fail(name, std::move(w));
}

void AxiomReport::hypothesis(const std::string& name, bool holds) {
    for (auto& h : hypotheses_)
        if (h.first == name) {
            h.second = holds;
            return;
        }
    hypotheses_.emplace_back(name, holds);
}

void AxiomReport::info(const std::string& key, const std::string& value) {
    infos_.emplace_back(key, value);
}

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
    for (const auto& e : other.entries_) {
        touch(prefix + e.name);
        for (const auto& w : e.failures) fail(prefix + e.name, w);
    }
    for (const auto& [n, h] : other.hypotheses_) hypothesis(prefix + n, h);
    for (const auto& [k, v] : other.infos_) info(prefix + k, v);
}

bool AxiomReport::passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const ReportEntry& e) { return e.passed; });
}

bool AxiomReport::passed(const std::string& name) const {
    const auto* e = find(name);
    if (!e) throw std::out_of_range("no report entry named " + name);
    return e->passed;
}

const ReportEntry* AxiomReport::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

bool AxiomReport::hypothesis_holds(const std::string& name) const {
    for (const auto& [n, h] : hypotheses_)
        if (n == name) return h;
    throw std::out_of_range("no hypothesis named " + name);
}

std::vector<std::string> AxiomReport::failed_names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
        if (!e.passed) out.push_back(e.name);
    return out;
}

std::string AxiomReport::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : infos_) os << "INFO " << k << " " << v << "\n";
    for (const auto& [n, h] : hypotheses_) os << "HYPOTHESIS " << n << " " << (h ? "TRUE" : "FALSE") << "\n";
    for (const auto& e : entries_) {
        os << "AXIOM " << e.name << " " << (e.passed ? "PASS" : "FAIL");
        if (!e.passed && !e.failures.empty()) {
            os << " witness=(";
            const auto& labels = e.failures.front().labels;
            for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace weakore
