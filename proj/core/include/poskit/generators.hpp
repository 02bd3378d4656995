#pragma once

#include <optional>
#include <vector>

#include "poskit/diagram.hpp"
#include "poskit/metric.hpp"
#include "poskit/poset.hpp"
#include "poskit/rng.hpp"
#include "poskit/seqdelta.hpp"
#include "poskit/valued_map.hpp"
#include "poskit/vietoris.hpp"

namespace poskit {

// Standard element names a, b, c, ...
std::vector<std::string> default_names(int n);

// All labeled posets on the given elements (every reflexive-transitive
// antisymmetric relation), deduplicated; deterministic order.
std::vector<FinPoset> all_posets_on(const std::vector<std::string>& names);

// All labeled posets with 0..max_n elements over the default names.
std::vector<FinPoset> all_posets_up_to(int max_n);

// One representative per isomorphism class.
std::vector<FinPoset> dedupe_by_iso(const std::vector<FinPoset>& ps);

// All monotone tables dom -> cod, lexicographic order.
std::vector<std::vector<int>> all_monotone_tables(const FinPoset& dom, const FinPoset& cod);

FinPoset random_poset(Rng& rng, int n);
// Nullopt exactly when cod is empty and dom is not.
std::optional<MonoMap> random_mono_map(Rng& rng, const FinPoset& dom, const FinPoset& cod);
Coalgebra random_coalgebra(Rng& rng, const FinPoset& x);
ValuedMap random_valued_map(Rng& rng, const FinPoset& x, unsigned grid_q);
Seq01 random_seq(Rng& rng, unsigned grid_q, int max_prefix);
// A random member of the limit class (increasing, gap at n at most 2^-n).
Seq01 random_limit_class_seq(Rng& rng, int max_prefix);
FinMetric random_metric(Rng& rng, int max_n, unsigned grid_q);

// Codirected shapes: towers with composite arrows and bottom-fans, with
// random monotone maps assigned.
FinDiagram random_codirected_diagram(Rng& rng, int max_objects, int max_elems);
// Filtered shapes: towers and top-fans.
FinDiagram random_filtered_diagram(Rng& rng, int max_objects, int max_elems);

}  // namespace poskit
