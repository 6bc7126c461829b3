#pragma once

// Verification suites behind the command-line subcommands. Each returns a
// report whose records carry the provenance of their expectation.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qzm/qalgebra.hpp"
#include "qzm/report.hpp"

namespace qzm {

/// Field and algebra for (cfg.n, cfg.h()) in the requested mode, with the
/// cache directory attached when one is configured.
std::unique_ptr<QAlgebra> make_algebra(const RunConfig& cfg, bool generic);

/// Admissible diagrams with their derived data and the closed-form count.
Report cmd_enumerate(const RunConfig& cfg);
/// q-integer identities, the cyclotomic relation and seeded field axioms.
Report cmd_verify_field(const RunConfig& cfg);
/// Relation instances, vacuum dimension, determinant consistency and the
/// bilinear identities; both field modes unless --generic-q restricts to one.
Report cmd_verify_algebra(const RunConfig& cfg);
/// F' dimension, growth, annihilation, nilpotency and commutation checks.
Report cmd_fprime(const RunConfig& cfg);
/// Hook vanishing v_h, w_h for row cfg.hook_row with the S/A audit.
Report cmd_check_w(const RunConfig& cfg);
/// action is "list", "validate" or "purge".
Report cmd_cache(const RunConfig& cfg, const std::string& action);

/// Seeded random chiral state of definite content: up to three words of a
/// random content of at most max_len letters, small integer coefficients.
ChiralState random_chiral_state(std::mt19937_64& rng, const FieldSpec& f, Chirality c, int n, int max_len);
/// Product of an unbarred and a barred random state.
TensorState random_tensor_state(std::mt19937_64& rng, const FieldSpec& f, int n, int max_len);

/// Family tops touched by the F' vectors of the algebra, both chiralities.
std::vector<Content> fprime_tops(const QAlgebra& q);

}  // namespace qzm
