#include "sheafcalc/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sheafcalc {

RawCategory monoid_category(const std::vector<std::string>& elements,
                            const std::vector<std::vector<std::size_t>>& mul) {
  RawCategory raw;
  raw.objects = {"*"};
  for (const auto& e : elements) raw.arrows.push_back({e, "*", "*"});
  raw.identities.emplace_back("*", elements.at(0));
  for (std::size_t x = 1; x < elements.size(); ++x) {
    for (std::size_t y = 1; y < elements.size(); ++y) {
      raw.composition.push_back({elements[x], elements[y], elements.at(mul.at(x).at(y))});
    }
  }
  return raw;
}

RawCategory cyclic_group(std::size_t n) {
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return monoid_category(names, mul);
}

namespace {

using Map = std::vector<std::uint8_t>;

Map compose_maps(const Map& x, const Map& y) {
  Map out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[y[i]];
  return out;
}

Map identity_map(std::size_t k) {
  Map m(k);
  for (std::size_t i = 0; i < k; ++i) m[i] = static_cast<std::uint8_t>(i);
  return m;
}

std::string image_string(const Map& m) {
  std::string s;
  for (auto v : m) s += static_cast<char>('0' + v);
  return s;
}

/// Closure of the identity and generators under composition, identity first.
std::vector<Map> monoid_closure(std::size_t k, const std::vector<Map>& generators, std::size_t limit) {
  std::vector<Map> elems{identity_map(k)};
  std::set<Map> seen{elems[0]};
  for (const auto& g : generators) {
    if (seen.insert(g).second) elems.push_back(g);
  }
  for (std::size_t i = 0; i < elems.size() && elems.size() <= limit; ++i) {
    for (std::size_t j = 0; j <= i && elems.size() <= limit; ++j) {
      for (const auto& m : {compose_maps(elems[i], elems[j]), compose_maps(elems[j], elems[i])}) {
        if (seen.insert(m).second) elems.push_back(m);
      }
    }
  }
  return elems;
}

RawCategory maps_to_monoid(const std::vector<Map>& elems, const std::vector<std::string>& names) {
  std::map<Map, std::size_t> where;
  for (std::size_t i = 0; i < elems.size(); ++i) where[elems[i]] = i;
  std::vector<std::vector<std::size_t>> mul(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) mul[x][y] = where.at(compose_maps(elems[x], elems[y]));
  }
  return monoid_category(names, mul);
}

}  // namespace

RawCategory symmetric_group3() {
  const std::vector<Map> elems{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  return maps_to_monoid(elems, {"id", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

RawCategory transformation_monoid(std::size_t k, const std::vector<std::vector<std::uint8_t>>& generators) {
  const auto elems = monoid_closure(k, generators, static_cast<std::size_t>(-1));
  std::vector<std::string> names{"id"};
  for (std::size_t i = 1; i < elems.size(); ++i) names.push_back("t" + image_string(elems[i]));
  return maps_to_monoid(elems, names);
}

RawCategory poset_category(const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = objects.size();
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[objects[i]] = i;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : leq) le.at(at.at(x)).at(at.at(y)) = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = true;
      }
    }
  }
  auto name = [&](std::size_t x, std::size_t y) { return objects[x] + "<=" + objects[y]; };
  RawCategory raw;
  raw.objects = objects;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (le[x][y]) raw.arrows.push_back({name(x, y), objects[x], objects[y]});
    }
    raw.identities.emplace_back(objects[x], name(x, x));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !le[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z != y && le[y][z]) raw.composition.push_back({name(y, z), name(x, y), name(x, z)});
      }
    }
  }
  return raw;
}

RawCategory chain_category(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> leq;
  for (std::size_t i = 0; i < n; ++i) {
    objects.push_back(std::to_string(i));
    if (i > 0) leq.emplace_back(objects[i - 1], objects[i]);
  }
  return poset_category(objects, leq);
}

RawCategory terminal_category() {
  RawCategory raw;
  raw.objects = {"*"};
  raw.arrows = {{"id", "*", "*"}};
  raw.identities = {{"*", "id"}};
  return raw;
}

RawCategory walking_arrow() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"u", "a", "b"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}};
  return raw;
}

RawCategory span_category() {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"f", "a", "b"}, {"g", "a", "c"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}};
  return raw;
}

RawCategory cospan_category() {
  RawCategory raw;
  raw.objects = {"a", "b", "c"};
  raw.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"f", "b", "a"}, {"g", "c", "a"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}};
  return raw;
}

RawCategory parallel_pair() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "a", "b"}};
  raw.identities = {{"a", "id_a"}, {"b", "id_b"}};
  return raw;
}

RawCategory disjoint_union(const RawCategory& a, const RawCategory& b) {
  RawCategory out;
  auto add = [&out](const RawCategory& part, const std::string& prefix) {
    for (const auto& o : part.objects) out.objects.push_back(prefix + o);
    for (const auto& f : part.arrows) out.arrows.push_back({prefix + f.id, prefix + f.dom, prefix + f.cod});
    for (const auto& [o, f] : part.identities) out.identities.emplace_back(prefix + o, prefix + f);
    for (const auto& c : part.composition) out.composition.push_back({prefix + c.g, prefix + c.f, prefix + c.gf});
  };
  add(a, "L.");
  add(b, "R.");
  return out;
}

RawCategory random_concrete_category(std::mt19937& rng, std::size_t objects, std::size_t max_arrows) {
  if (objects == 0) throw std::invalid_argument("random_concrete_category needs at least one object");
  struct Arrow {
    std::size_t dom, cod;
    Map map;
    auto operator<=>(const Arrow&) const = default;
  };
  for (;;) {
    std::vector<std::size_t> size(objects);
    for (auto& s : size) s = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<Arrow> arrows;
    std::set<Arrow> seen;
    auto push = [&](Arrow a) {
      if (seen.insert(a).second) arrows.push_back(std::move(a));
    };
    for (std::size_t o = 0; o < objects; ++o) push({o, o, identity_map(size[o])});
    const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, objects + 1)(rng);
    for (std::size_t i = 0; i < gens; ++i) {
      const std::size_t d = std::uniform_int_distribution<std::size_t>(0, objects - 1)(rng);
      const std::size_t c = std::uniform_int_distribution<std::size_t>(0, objects - 1)(rng);
      Map m(size[d]);
      for (auto& v : m) v = static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(0, size[c] - 1)(rng));
      push({d, c, m});
    }
    for (std::size_t i = 0; i < arrows.size() && arrows.size() <= max_arrows; ++i) {
      for (std::size_t j = 0; j < arrows.size() && arrows.size() <= max_arrows; ++j) {
        if (arrows[j].cod == arrows[i].dom) push({arrows[j].dom, arrows[i].cod, compose_maps(arrows[i].map, arrows[j].map)});
        if (arrows[i].cod == arrows[j].dom) push({arrows[i].dom, arrows[j].cod, compose_maps(arrows[j].map, arrows[i].map)});
      }
    }
    if (arrows.size() > max_arrows) continue;

    RawCategory raw;
    for (std::size_t o = 0; o < objects; ++o) raw.objects.push_back("X" + std::to_string(o));
    std::map<Arrow, std::string> name;
    for (const auto& a : arrows) {
      const std::string n = a.dom == a.cod && a.map == identity_map(size[a.dom])
                                ? "id_" + raw.objects[a.dom]
                                : raw.objects[a.dom] + ">" + raw.objects[a.cod] + ":" + image_string(a.map);
      name[a] = n;
      raw.arrows.push_back({n, raw.objects[a.dom], raw.objects[a.cod]});
    }
    for (std::size_t o = 0; o < objects; ++o) raw.identities.emplace_back(raw.objects[o], "id_" + raw.objects[o]);
    for (const auto& f : arrows) {
      for (const auto& g : arrows) {
        if (f.cod == g.dom) raw.composition.push_back({name[g], name[f], name[Arrow{f.dom, g.cod, compose_maps(g.map, f.map)}]});
      }
    }
    return raw;
  }
}

RawCategory random_transformation_monoid(std::mt19937& rng, std::size_t k, std::size_t max_elements) {
  for (;;) {
    const std::size_t gens = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    std::vector<Map> generators;
    for (std::size_t i = 0; i < gens; ++i) {
      Map m(k);
      for (auto& v : m) v = static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
      generators.push_back(m);
    }
    if (monoid_closure(k, generators, max_elements).size() <= max_elements) return transformation_monoid(k, generators);
  }
}

std::vector<NamedCategory> category_corpus() {
  std::vector<NamedCategory> out;
  out.push_back({"terminal", terminal_category()});
  out.push_back({"C2", cyclic_group(2)});
  out.push_back({"C3", cyclic_group(3)});
  out.push_back({"S3", symmetric_group3()});
  out.push_back({"C3+C3", disjoint_union(cyclic_group(3), cyclic_group(3))});
  out.push_back({"idempotent", monoid_category({"1", "e"}, {{0, 1}, {1, 1}})});
  // x∘y = x: left-zero band with a unit
  out.push_back({"left-zero", monoid_category({"1", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}})});
  out.push_back({"right-zero", monoid_category({"1", "a", "b"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}})});
  out.push_back({"null", monoid_category({"1", "a", "0"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}})});
  out.push_back({"tail", monoid_category({"1", "a", "a2"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}})});
  out.push_back({"Z4-mult",
                 monoid_category({"1", "0", "2", "3"}, {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 1, 1, 2}, {3, 1, 2, 0}})});
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"chain" + std::to_string(n), chain_category(n)});
  out.push_back({"diamond", poset_category({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}})});
  {
    RawCategory sq;
    sq.objects = {"a", "b", "c", "d"};
    sq.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"id_c", "c", "c"}, {"id_d", "d", "d"},
                 {"p", "a", "b"},    {"q", "a", "c"},    {"r", "b", "d"},    {"s", "c", "d"},
                 {"t", "a", "d"}};
    sq.identities = {{"a", "id_a"}, {"b", "id_b"}, {"c", "id_c"}, {"d", "id_d"}};
    sq.composition = {{"r", "p", "t"}, {"s", "q", "t"}};
    out.push_back({"square", sq});
    RawCategory free = sq;
    free.arrows.back() = {"rp", "a", "d"};
    free.arrows.push_back({"sq", "a", "d"});
    free.composition = {{"r", "p", "rp"}, {"s", "q", "sq"}};
    out.push_back({"free-square", free});
  }
  out.push_back({"walking-arrow", walking_arrow()});
  out.push_back({"span", span_category()});
  out.push_back({"cospan", cospan_category()});
  out.push_back({"parallel-pair", parallel_pair()});
  out.push_back({"tripod", poset_category({"a", "b", "c", "d"}, {{"b", "a"}, {"c", "a"}, {"d", "a"}})});
  out.push_back({"discrete2", disjoint_union(terminal_category(), terminal_category())});
  {
    RawCategory iso;
    iso.objects = {"a", "b"};
    iso.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"i", "a", "b"}, {"j", "b", "a"}};
    iso.identities = {{"a", "id_a"}, {"b", "id_b"}};
    iso.composition = {{"j", "i", "id_a"}, {"i", "j", "id_b"}};
    out.push_back({"walking-iso", iso});
  }
  out.push_back({"arrow+C2", disjoint_union(walking_arrow(), cyclic_group(2))});
  out.push_back({"zigzag", poset_category({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"c", "d"}})});
  {
    // r∘s = id_b, s∘r = e idempotent on a
    RawCategory split;
    split.objects = {"a", "b"};
    split.arrows = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"r", "a", "b"}, {"s", "b", "a"}, {"e", "a", "a"}};
    split.identities = {{"a", "id_a"}, {"b", "id_b"}};
    split.composition = {{"r", "s", "id_b"}, {"s", "r", "e"}, {"e", "e", "e"}, {"r", "e", "r"}, {"e", "s", "s"}};
    out.push_back({"split-idempotent", split});
  }
  std::mt19937 rng(20240917u);
  for (int i = 0; i < 5; ++i) {
    out.push_back({"random-concrete-" + std::to_string(i), random_concrete_category(rng, 2 + i % 2, 10)});
  }
  for (int i = 0; i < 4; ++i) {
    out.push_back({"random-monoid-" + std::to_string(i), random_transformation_monoid(rng, 3, 7)});
  }
  return out;
}

FiniteFrame chain_frame(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain_frame needs at least one element");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) names.push_back("0");
    else if (i + 1 == n) names.push_back("1");
    else if (n == 3) names.push_back("m");
    else names.push_back("x" + std::to_string(i));
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem i = 1; i < n; ++i) order.emplace_back(i - 1, i);
  return FiniteFrame::from_order(std::move(names), order);
}

FiniteFrame product_frame(const FiniteFrame& a, const FiniteFrame& b) {
  std::vector<std::string> names;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < b.size(); ++y) names.push_back(a.name(x) + "." + b.name(y));
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem p = 0; p < names.size(); ++p) {
    for (Elem q = 0; q < names.size(); ++q) {
      if (a.leq(p / b.size(), q / b.size()) && b.leq(p % b.size(), q % b.size())) order.emplace_back(p, q);
    }
  }
  return FiniteFrame::from_order(std::move(names), order);
}

FiniteFrame glue_frame(const FiniteFrame& a, const FiniteFrame& b) {
  std::vector<std::string> names = a.names();
  std::vector<Elem> where(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    if (y == b.bottom()) {
      where[y] = a.top();
      continue;
    }
    std::string n = b.name(y);
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    where[y] = names.size();
    names.push_back(n);
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(x, y)) order.emplace_back(x, y);
    }
    order.emplace_back(x, a.top());
  }
  for (Elem x = 0; x < b.size(); ++x) {
    for (Elem y = 0; y < b.size(); ++y) {
      if (b.leq(x, y)) order.emplace_back(where[x], where[y]);
    }
  }
  return FiniteFrame::from_order(std::move(names), order);
}

FiniteFrame boolean_frame(std::size_t atoms) {
  if (atoms > 6) throw std::invalid_argument("boolean_frame supports at most 6 atoms");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<std::string> names;
  for (std::size_t s = 0; s < n; ++s) {
    std::string bits;
    for (std::size_t i = 0; i < atoms; ++i) bits += ((s >> i) & 1u) ? '1' : '0';
    names.push_back(atoms == 0 ? "1" : bits);
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if ((s & t) == s) order.emplace_back(s, t);
    }
  }
  return FiniteFrame::from_order(std::move(names), order);
}

FiniteFrame diamond_frame() {
  const std::vector<std::pair<std::string, std::string>> order{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  return FiniteFrame::from_order({"0", "a", "b", "1"}, order);
}

FiniteFrame five_element_frame() {
  const std::vector<std::pair<std::string, std::string>> order{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"},
                                                               {"c", "1"}};
  return FiniteFrame::from_order({"0", "a", "b", "c", "1"}, order);
}

std::vector<NamedFrame> frame_corpus() {
  const auto c2 = chain_frame(2);
  const auto c3 = chain_frame(3);
  const auto d = diamond_frame();
  std::vector<NamedFrame> out;
  out.push_back({"2-chain", c2});
  out.push_back({"3-chain", c3});
  out.push_back({"4-chain", chain_frame(4)});
  out.push_back({"5-chain", chain_frame(5)});
  out.push_back({"diamond", d});
  out.push_back({"five", five_element_frame()});
  out.push_back({"3-chain+diamond", glue_frame(c3, d)});
  out.push_back({"diamond+3-chain", glue_frame(d, c3)});
  out.push_back({"free-distributive-2", glue_frame(glue_frame(c3, d), c3)});
  out.push_back({"2x3", product_frame(c2, c3)});
  out.push_back({"diamond+diamond", glue_frame(d, d)});
  out.push_back({"boolean-8", boolean_frame(3)});
  out.push_back({"2x4", product_frame(c2, chain_frame(4))});
  out.push_back({"3x3", product_frame(c3, c3)});
  out.push_back({"diamond+2x3", glue_frame(d, product_frame(c2, c3))});
  out.push_back({"2x5", product_frame(c2, chain_frame(5))});
  return out;
}

}  // namespace sheafcalc
