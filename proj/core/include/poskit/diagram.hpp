#pragma once

#include <map>
#include <string>
#include <vector>

#include "poskit/poset.hpp"

namespace poskit {

struct DiagramArrow {
  std::string label;
  std::string source;
  std::string target;
  MonoMap map;
};

// Finite diagram presented by generating arrows. On construction the arrow
// set is closed under composition (deduplicated by source, target and table;
// identities stay implicit), so cofilteredness checks and the limit criterion
// range over the whole generated category.
class FinDiagram {
public:
  FinDiagram(std::vector<std::pair<std::string, FinPoset>> objects,
             std::vector<DiagramArrow> arrows);

  struct Edge {
    int src = 0;
    int tgt = 0;
    std::vector<int> table;
  };

  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::string& object_name(int i) const { return objects_[i].first; }
  const FinPoset& object(int i) const { return objects_[i].second; }
  int object_index(const std::string& name) const;  // throws UnknownElement
  const std::vector<DiagramArrow>& given_arrows() const { return given_; }
  const std::vector<Edge>& generated() const { return gen_; }

  // Every pair of objects has a common lower bound with edges to both, and
  // every parallel pair of generated edges is equalized by an incoming edge.
  bool codirected(std::string* why = nullptr) const;
  // Dual: common upper bounds and coequalizing outgoing edges.
  bool filtered(std::string* why = nullptr) const;

private:
  std::vector<std::pair<std::string, FinPoset>> objects_;
  std::vector<DiagramArrow> given_;
  std::vector<Edge> gen_;
};

struct DiagramCone {
  FinPoset apex;
  std::vector<MonoMap> legs;  // aligned with the diagram's object order
};

// Validates that every object has a leg with matching endpoints.
// Throws IncompatibleCone.
DiagramCone make_cone(const FinDiagram& d, FinPoset apex,
                      const std::map<std::string, MonoMap>& legs);

enum class LimitMode { CompactHausdorff, PosComp };

// Bourbaki-style criterion: the cone is a limit iff it is jointly injective
// and, for every object i, the image of the leg equals the intersection of
// the images of all generated edges into i. PosComp mode additionally
// requires the cone to be initial.
// Throws NotCodirected when the index is not codirected and IncompatibleCone
// when the legs do not commute with the diagram edges.
bool limit_check(const FinDiagram& d, const DiagramCone& c, LimitMode mode);

// Thread construction: tuples compatible with every generated edge, ordered
// componentwise, with the projection legs.
DiagramCone direct_limit_cone(const FinDiagram& d);

// True iff the canonical comparison map into the thread poset is bijective
// (CompactHausdorff) resp. an order isomorphism (PosComp). Independent route
// used to cross-check limit_check.
bool is_limit_by_construction(const FinDiagram& d, const DiagramCone& c, LimitMode mode);

// Set-level cocone: orders are ignored, legs are bare functions into `target`.
struct DiagramCocone {
  std::vector<std::string> target;
  std::vector<std::vector<int>> legs;  // aligned with the diagram's object order
};

DiagramCocone make_cocone(const FinDiagram& d, std::vector<std::string> target,
                          const std::map<std::string, std::map<std::string, std::string>>& legs);

// Kernel criterion for filtered colimits of the underlying sets: the cocone
// is a colimit iff it is jointly surjective and c_i(x) = c_i(y) exactly when
// some generated edge out of i identifies x and y.
// Throws NotFiltered / IncompatibleCocone.
bool colimit_check_set(const FinDiagram& d, const DiagramCocone& c);

// Quotient of the disjoint union by the edge-generated equivalence.
DiagramCocone direct_colimit_set(const FinDiagram& d);

// Mediating comparison with the quotient construction; independent route
// used to cross-check colimit_check_set.
bool is_colimit_by_construction(const FinDiagram& d, const DiagramCocone& c);

}  // namespace poskit
