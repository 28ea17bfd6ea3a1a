#pragma once

#include "qca/cache.hpp"
#include "qca/dcb.hpp"
#include "qca/report.hpp"

namespace qca {

// All identity suites take the rank/variant through the solver's context and
// append one machine-readable line per checked identity.

// Relation-level oracle: every dual and primal straightening relation as an
// exact identity in the shuffle algebra (declared in pbw_oracle.cpp).
Report verify_straightening_oracle(PbwAlgebra& alg);
Report verify_leading_coefficients(PbwAlgebra& alg);

// Euler counts of the generator expansions.
Report verify_euler(const Context& ctx);

// Kashiwara form: generator norms, orthogonality, and full dual-PBW duality
// up to the given degree height.
Report verify_form(const Context& ctx, int max_height = 4);

// Dual canonical basis: p_i, displayed closed forms, sigma eigenproperty,
// unitriangularity, linear-extension independence, p-commutation exponents.
Report verify_dcb(DcbSolver& solver, const DcbCache* cache = nullptr);

// Recursion/exchange/commutator identity families over every valid pair.
Report verify_recursion(DcbSolver& solver);

// Classical limit: specialization matches the determinant recursion, and the
// determinant/exchange cross-checks hold.
Report verify_specialization(DcbSolver& solver);

// Seeds: exchange graph counts (rank 3), compatible pair, Lambda vs the
// listed relations, quantum mutation chains.
Report verify_mutation(DcbSolver& solver);

// Property-style randomized suites: shuffle associativity, Serre relations,
// straightening confluence, sigma involutivity.
Report verify_properties(PbwAlgebra& alg, int confluence_samples = 500);

Report verify_all(DcbSolver& solver, const DcbCache* cache = nullptr);

} // namespace qca
