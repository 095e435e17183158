#include "wha/groupoid.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace wha {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw Error(ErrorKind::invalid_groupoid, msg);
}

} // namespace

Groupoid Groupoid::make(std::vector<std::string> objects, std::vector<Arrow> arrows,
                        const std::map<std::string, std::string>& inverses,
                        const std::optional<ComposeTable>& table) {
  Groupoid g;
  g.objects_ = std::move(objects);
  g.arrows_ = std::move(arrows);

  std::set<std::string> objset(g.objects_.begin(), g.objects_.end());
  if (objset.size() != g.objects_.size()) bad("duplicate object label");
  if (g.objects_.empty()) bad("a groupoid needs at least one object");

  std::map<std::string, int> by_name;
  for (int i = 0; i < g.arrow_count(); ++i) {
    const Arrow& a = g.arrows_[i];
    if (!objset.count(a.src) || !objset.count(a.tgt))
      bad("arrow '" + a.name + "' has an undeclared endpoint");
    if (!by_name.emplace(a.name, i).second) bad("duplicate arrow name '" + a.name + "'");
  }

  auto idx = [&](const std::string& n) {
    auto it = by_name.find(n);
    if (it == by_name.end()) bad("unknown arrow '" + n + "'");
    return it->second;
  };

  if (table) {
    for (const auto& [fn, gn, hn] : *table) {
      int f = idx(fn), gg = idx(gn), h = idx(hn);
      if (g.arrows_[f].src != g.arrows_[gg].tgt)
        bad("table entry " + fn + "." + gn + " is not composable");
      if (g.arrows_[h].src != g.arrows_[gg].src || g.arrows_[h].tgt != g.arrows_[f].tgt)
        bad("table entry " + fn + "." + gn + " has mismatched endpoints");
      if (!g.compose_.emplace(std::make_pair(f, gg), h).second)
        bad("duplicate table entry for " + fn + "." + gn);
    }
    for (int f = 0; f < g.arrow_count(); ++f)
      for (int h = 0; h < g.arrow_count(); ++h)
        if (g.arrows_[f].src == g.arrows_[h].tgt && !g.compose_.count({f, h}))
          bad("missing table entry for " + g.arrows_[f].name + "." + g.arrows_[h].name);
  } else {
    // Inference: the composite must be the unique arrow with the right
    // endpoints.
    for (int f = 0; f < g.arrow_count(); ++f)
      for (int h = 0; h < g.arrow_count(); ++h) {
        if (g.arrows_[f].src != g.arrows_[h].tgt) continue;
        int found = -1;
        for (int c = 0; c < g.arrow_count(); ++c) {
          if (g.arrows_[c].src != g.arrows_[h].src || g.arrows_[c].tgt != g.arrows_[f].tgt)
            continue;
          if (found >= 0)
            bad("composite " + g.arrows_[f].name + "." + g.arrows_[h].name +
                " is ambiguous; supply an explicit compose table");
          found = c;
        }
        if (found < 0)
          bad("no candidate composite for " + g.arrows_[f].name + "." + g.arrows_[h].name);
        g.compose_[{f, h}] = found;
      }
  }

  g.inverse_.assign(g.arrow_count(), -1);
  for (const auto& [an, bn] : inverses) {
    g.inverse_[idx(an)] = idx(bn);
  }
  for (int a = 0; a < g.arrow_count(); ++a)
    if (g.inverse_[a] < 0) bad("arrow '" + g.arrows_[a].name + "' has no inverse entry");

  // Identities: per object, the unique arrow acting neutrally on both sides.
  for (const auto& x : g.objects_) {
    int found = -1;
    for (int e = 0; e < g.arrow_count(); ++e) {
      if (g.arrows_[e].src != x || g.arrows_[e].tgt != x) continue;
      bool neutral = true;
      for (int f = 0; f < g.arrow_count() && neutral; ++f) {
        if (g.arrows_[f].src == x && g.compose_.at({f, e}) != f) neutral = false;
        if (g.arrows_[f].tgt == x && g.compose_.at({e, f}) != f) neutral = false;
      }
      if (!neutral) continue;
      if (found >= 0) bad("two identity arrows on object '" + x + "'");
      found = e;
    }
    if (found < 0) bad("object '" + x + "' has no identity arrow");
    g.identities_[x] = found;
  }

  g.validate();
  return g;
}

void Groupoid::validate() const {
  // Associativity over every composable triple.
  for (int f = 0; f < arrow_count(); ++f)
    for (int g2 = 0; g2 < arrow_count(); ++g2) {
      if (arrows_[f].src != arrows_[g2].tgt) continue;
      int fg = compose_.at({f, g2});
      for (int h = 0; h < arrow_count(); ++h) {
        if (arrows_[g2].src != arrows_[h].tgt) continue;
        int gh = compose_.at({g2, h});
        if (compose_.at({fg, h}) != compose_.at({f, gh}))
          bad("associativity fails at " + arrows_[f].name + "." + arrows_[g2].name + "." +
              arrows_[h].name);
      }
    }
  // Inverse laws.
  for (int a = 0; a < arrow_count(); ++a) {
    int ai = inverse_[a];
    if (arrows_[ai].src != arrows_[a].tgt || arrows_[ai].tgt != arrows_[a].src)
      bad("inverse of '" + arrows_[a].name + "' has wrong endpoints");
    if (inverse_[ai] != a) bad("inverse map is not an involution at '" + arrows_[a].name + "'");
    if (compose_.at({a, ai}) != identities_.at(arrows_[a].tgt) ||
        compose_.at({ai, a}) != identities_.at(arrows_[a].src))
      bad("inverse laws fail at '" + arrows_[a].name + "'");
  }
}

int Groupoid::arrow_index(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].name == name) return i;
  throw Error(ErrorKind::invalid_groupoid, "unknown arrow '" + name + "'");
}

std::optional<int> Groupoid::compose(int f, int g) const {
  auto it = compose_.find({f, g});
  if (it == compose_.end()) return std::nullopt;
  return it->second;
}

int Groupoid::identity_of(const std::string& object) const {
  auto it = identities_.find(object);
  if (it == identities_.end())
    throw Error(ErrorKind::invalid_groupoid, "unknown object '" + object + "'");
  return it->second;
}

int Groupoid::src_object(int a) const {
  return static_cast<int>(std::find(objects_.begin(), objects_.end(), arrows_[a].src) -
                          objects_.begin());
}

int Groupoid::tgt_object(int a) const {
  return static_cast<int>(std::find(objects_.begin(), objects_.end(), arrows_[a].tgt) -
                          objects_.begin());
}

} // namespace wha
