#include "verbs.hpp"

namespace poskit::cli {

const std::vector<OpVerb>& op_verb_table() {
  static const std::vector<OpVerb> table = {
      {"luk_tensor", "dual check-axioms"},
      {"pitchfork", "dual check-axioms"},
      {"trunc_minus", "metric check-initial"},
      {"oplus", "metric product"},

      {"validate_poset", "poset validate"},
      {"product", "poset product"},
      {"equalizer", "poset equalizer"},
      {"image_factorize", "poset factorize"},
      {"is_initial_cone", "poset limit-check"},
      {"limit_check", "poset limit-check"},
      {"colimit_check_set", "poset colimit-check"},

      {"vietoris_object", "vietoris object"},
      {"vietoris_map", "vietoris map"},
      {"vietoris_unit", "vietoris monad-laws"},
      {"vietoris_mult", "vietoris monad-laws"},
      {"kleisli_compose", "coalg compose"},
      {"is_coalgebra_hom", "coalg check-hom"},
      {"classify", "coalg classify"},

      {"pointwise_op", "dual check-axioms"},
      {"hom_action", "suite run"},
      {"check_axioms", "dual check-axioms"},
      {"upset_indicators", "dual density"},
      {"generate_closure", "dual density"},
      {"density_check", "dual density"},
      {"monotone_extend", "dual extend"},
      {"separating_family", "dual separate"},
      {"equalizer_presentation", "dual eq-present"},

      {"running_join", "delta eval"},
      {"rate_limit", "delta eval"},
      {"in_limit_class", "delta eval"},
      {"limit_value", "delta eval"},
      {"delta", "delta eval"},
      {"approximant_from_samples", "suite run"},

      {"order_of", "metric order"},
      {"symmetrize", "metric net"},
      {"is_separated", "metric order"},
      {"canonical_metric", "suite run"},
      {"product_metric", "metric product"},
      {"epsilon_net", "metric net"},
      {"yoneda_initial", "metric check-initial"},

      {"run", "suite run"},
      {"roundtrip", "suite roundtrip"},
  };
  return table;
}

const std::vector<std::string>& all_verbs() {
  static const std::vector<std::string> verbs = {
      "poset validate",   "poset product",     "poset equalizer", "poset factorize",
      "poset limit-check", "poset colimit-check",
      "vietoris object",  "vietoris map",      "vietoris monad-laws",
      "coalg check-hom",  "coalg classify",    "coalg compose",
      "dual check-axioms", "dual density",     "dual extend",     "dual separate",
      "dual eq-present",
      "delta eval",
      "metric order",     "metric net",        "metric check-initial", "metric product",
      "suite run",        "suite roundtrip",
  };
  return verbs;
}

}  // namespace poskit::cli
