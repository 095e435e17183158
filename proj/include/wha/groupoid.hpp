#ifndef WHA_GROUPOID_HPP
#define WHA_GROUPOID_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wha/error.hpp"

namespace wha {

/// A finite groupoid given by labelled objects and arrows. Composition is
/// written categorically: compose(f, g) = f after g, defined iff
/// src(f) == tgt(g). When no table is supplied, each composite is inferred
/// by search and must be the unique arrow with the right endpoints.
class Groupoid {
public:
  struct Arrow {
    std::string name, src, tgt;
  };

  using ComposeTable = std::vector<std::array<std::string, 3>>; // {f, g, f.g}

  static Groupoid make(std::vector<std::string> objects, std::vector<Arrow> arrows,
                       const std::map<std::string, std::string>& inverses,
                       const std::optional<ComposeTable>& table = std::nullopt);

  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int arrow_index(const std::string& name) const;

  /// f after g; empty when src(f) != tgt(g).
  std::optional<int> compose(int f, int g) const;
  int inverse(int a) const { return inverse_[a]; }
  int identity_of(const std::string& object) const;

  int src_object(int a) const;
  int tgt_object(int a) const;

private:
  Groupoid() = default;
  void validate() const;

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::map<std::pair<int, int>, int> compose_;
  std::vector<int> inverse_;
  std::map<std::string, int> identities_;
};

} // namespace wha

#endif
