// Structured pass/fail records with per-identity maximum residuals.

#pragma once

#include <string>
#include <vector>

#include "tensor.hpp"

namespace qhstar {

struct CheckEntry {
    std::string name;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool passed = true;
};

struct CheckReport {
    std::vector<CheckEntry> entries;
    bool overall = true;

    void add(std::string name, double residual, double threshold) {
        bool ok = residual <= threshold;
        entries.push_back({std::move(name), residual, threshold, ok});
        overall = overall && ok;
    }

    /// Entry comparing two tensors; threshold scales with the operands' max-norms.
    void add_cmp(std::string name, const TensorElement& x, const TensorElement& y, const ToleranceConfig& tol) {
        double scale = std::max(max_abs(x), max_abs(y));
        add(std::move(name), max_abs_diff(x, y), tol.threshold(scale));
    }

    void add_scalar(std::string name, cplx x, cplx y, const ToleranceConfig& tol) {
        double scale = std::max(std::abs(x), std::abs(y));
        add(std::move(name), std::abs(x - y), tol.threshold(scale));
    }

    void add_bool(std::string name, bool ok) { add(std::move(name), ok ? 0.0 : 1.0, 0.5); }

    void merge(const CheckReport& other) {
        for (const auto& e : other.entries) {
            entries.push_back(e);
            overall = overall && e.passed;
        }
    }

    double max_residual() const {
        double m = 0.0;
        for (const auto& e : entries) m = std::max(m, e.max_residual);
        return m;
    }

    const CheckEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    /// True when every entry except the named ones passes.
    bool all_pass_except(const std::vector<std::string>& names) const {
        for (const auto& e : entries) {
            bool excluded = false;
            for (const auto& n : names)
                if (e.name == n) excluded = true;
            if (!excluded && !e.passed) return false;
        }
        return true;
    }
};

}  // namespace qhstar
