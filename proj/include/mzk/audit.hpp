#pragma once

#include "mzk/graph.hpp"
#include "mzk/io.hpp"
#include "mzk/lists.hpp"
#include "mzk/solve.hpp"
#include "mzk/verify.hpp"

#include <string>
#include <vector>

namespace mzk {

inline constexpr const char* kVersion = "0.1.0";

struct AuditOptions {
    std::uint64_t solve_budget = kDefaultSolveBudget;
    std::uint64_t hamilton_budget = kDefaultHamiltonBudget;
};

struct Claim {
    std::string name;
    bool pass = false;
    Json certificate;
};

struct AuditReport {
    std::vector<Claim> claims;
    AuditOptions options;

    bool all_pass() const;
    const Claim* find(const std::string& name) const;
};

/// Checks every structural claim about the 63-vertex graph on (g, lists):
/// construction counts, planarity, chromatic number 3, non-4-choosability,
/// a Hamiltonian cycle, the cut certificate and the perfect matching of
/// g - apex. Sub-failures are recorded, never thrown.
AuditReport audit(const Graph& g, const ListAssignment& lists, const AuditOptions& options = {});

/// Audit of the freshly built graph and canonical lists.
AuditReport audit(const AuditOptions& options = {});

/// Claims in a fixed order; no timings, so identical inputs give identical bytes.
Json audit_report_to_json(const AuditReport& report);

}  // namespace mzk
