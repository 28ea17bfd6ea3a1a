#pragma once

#include "qca/cluster.hpp"
#include "qca/context.hpp"
#include "qca/laurent.hpp"
#include "qca/pbw.hpp"
#include "qca/quantum.hpp"
#include "qca/shuffle.hpp"

#include <json.hpp>

namespace qca {

using nlohmann::json;

// HalfLaurent <-> sorted list of [twice_exponent, coefficient-as-decimal-string]
json laurent_to_json(const HalfLaurent& f);
HalfLaurent laurent_from_json(const json& j);

// ShuffleElement <-> [{"word":[ints],"coeff":...}] sorted lexicographically
json shuffle_to_json(const ShuffleElement& x);

// DualPBWElement <-> {"n","variant","basis":"dualPBW","terms":[{"a":[...],"coeff":...}]}
json pbw_to_json(const Context& ctx, const DualPBWElement& x);
DualPBWElement pbw_from_json(const Context& ctx, const json& j);

// Context dump: betas and the generator table
json context_to_json(const Context& ctx);

// Quantum seed: B, Lambda, frame exponent vectors with prefactors
json quantum_seed_to_json(const QuantumSeed& seed);

json intmat_to_json(const IntMat& m);

} // namespace qca
