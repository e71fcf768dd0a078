#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace stabmc {

struct SourceLoc {
    uint32_t line = 0;  // 1-based, 0 = unknown
    uint32_t column = 0;

    bool operator==(const SourceLoc&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, SourceLoc loc) {
    return os << loc.line << ':' << loc.column;
}

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    SourceLoc loc;
    std::string message;
};

/// Accumulates parse/type diagnostics. Warnings never block a pipeline stage;
/// errors do.
class DiagnosticList {
  public:
    void error(SourceLoc loc, std::string message) {
        items_.push_back({Severity::Error, loc, std::move(message)});
    }
    void warning(SourceLoc loc, std::string message) {
        items_.push_back({Severity::Warning, loc, std::move(message)});
    }

    bool has_errors() const {
        for (const auto& d : items_)
            if (d.severity == Severity::Error) return true;
        return false;
    }
    size_t error_count() const {
        size_t n = 0;
        for (const auto& d : items_) n += d.severity == Severity::Error;
        return n;
    }
    size_t warning_count() const { return items_.size() - error_count(); }

    const std::vector<Diagnostic>& items() const { return items_; }
    bool empty() const { return items_.empty(); }

    void append(const DiagnosticList& other) {
        items_.insert(items_.end(), other.items_.begin(), other.items_.end());
    }

    void render(std::ostream& os, const std::string& file = "") const {
        for (const auto& d : items_) {
            if (!file.empty()) os << file << ':';
            os << d.loc << ": "
               << (d.severity == Severity::Error ? "error" : "warning") << ": "
               << d.message << '\n';
        }
    }

  private:
    std::vector<Diagnostic> items_;
};

}  // namespace stabmc
