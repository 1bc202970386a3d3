#include "sheafcalc/coverage.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

std::vector<Sieve> all_sieves(const FinCategory& C, ObjectId c, const Caps& caps) {
  const std::size_t n = C.fan_in(c).size();
  if (n > caps.max_fanin) {
    throw CapExceeded("object '" + C.name(c) + "' has fan-in " + std::to_string(n) +
                      ", above the cap of " + std::to_string(caps.max_fanin));
  }
  std::vector<Sieve> out;
  for (SieveMask m = 0; m < (SieveMask{1} << n); ++m) {
    if (is_sieve(C, c, m)) out.emplace_back(c, m);
  }
  std::ranges::sort(out, [](const Sieve& a, const Sieve& b) {
    const auto pa = std::popcount(a.mask()), pb = std::popcount(b.mask());
    return pa != pb ? pa < pb : a.mask() < b.mask();
  });
  return out;
}

SieveLattice::SieveLattice(std::shared_ptr<const FinCategory> category, const Caps& caps)
    : category_(std::move(category)), caps_(caps) {
  const auto& C = *category_;
  sieves_.reserve(C.object_count());
  ids_.resize(C.object_count());
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    sieves_.push_back(all_sieves(C, object_at(c), caps));
    for (std::size_t i = 0; i < sieves_[c].size(); ++i) ids_[c].emplace(sieves_[c][i].mask(), i);
  }
}

std::size_t SieveLattice::id(const Sieve& S) const {
  if (index(S.root()) >= ids_.size()) throw InputError("sieve root is not an object");
  const auto& m = ids_[index(S.root())];
  auto it = m.find(S.mask());
  if (it == m.end()) {
    throw InputError("arrow set " + to_string(category(), S) + " on '" + category().name(S.root()) +
                     "' is not a sieve");
  }
  return it->second;
}

std::shared_ptr<const SieveLattice> make_lattice(FinCategory C, const Caps& caps) {
  return std::make_shared<const SieveLattice>(std::make_shared<const FinCategory>(std::move(C)), caps);
}

bool GrothendieckTopology::covers(const Sieve& S) const {
  return covers_.at(index(S.root()))[lattice_->id(S)];
}

std::vector<Sieve> GrothendieckTopology::covering_sieves(ObjectId c) const {
  std::vector<Sieve> out;
  const auto sieves = lattice_->sieves(c);
  for (std::size_t i = 0; i < sieves.size(); ++i) {
    if (covers_[index(c)][i]) out.push_back(sieves[i]);
  }
  return out;
}

std::vector<Sieve> GrothendieckTopology::all_covering_sieves() const {
  std::vector<Sieve> out;
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    auto part = covering_sieves(object_at(c));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t GrothendieckTopology::covering_count() const {
  std::size_t n = 0;
  for (const auto& row : covers_) n += static_cast<std::size_t>(std::ranges::count(row, true));
  return n;
}

bool GrothendieckTopology::contains(const GrothendieckTopology& finer) const {
  if (covers_.size() != finer.covers_.size()) return false;
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    for (std::size_t i = 0; i < covers_[c].size(); ++i) {
      if (finer.covers_[c][i] && !covers_[c][i]) return false;
    }
  }
  return true;
}

// Saturates a covering family under maximality, upward closure, stability and
// transitivity. Each rule only adds sieves that every topology containing the
// current family must contain, so the fixed point is the least topology.
class TopologyBuilder {
 public:
  explicit TopologyBuilder(std::shared_ptr<const SieveLattice> lattice) : lattice_(std::move(lattice)) {
    const auto& C = lattice_->category();
    covers_.resize(C.object_count());
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      covers_[c].assign(lattice_->count(object_at(c)), false);
      covers_[c].back() = true;  // maximal sieve
    }
  }

  void add(const Sieve& S) { covers_[index(S.root())][lattice_->id(S)] = true; }

  void add_all(const GrothendieckTopology& J) {
    for (std::size_t c = 0; c < covers_.size(); ++c) {
      for (std::size_t i = 0; i < covers_[c].size(); ++i) {
        if (J.covers_[c][i]) covers_[c][i] = true;
      }
    }
  }

  GrothendieckTopology saturate() {
    const auto& C = lattice_->category();
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < covers_.size(); ++c) {
        const auto sieves = lattice_->sieves(object_at(c));
        for (std::size_t i = 0; i < sieves.size(); ++i) {
          if (!covers_[c][i]) continue;
          for (std::size_t k = 0; k < sieves.size(); ++k) {
            if (!covers_[c][k] && sieves[i].subset_of(sieves[k])) {
              covers_[c][k] = true;
              changed = true;
            }
          }
          for (ArrowId f : C.fan_in(object_at(c))) {
            const Sieve pb = pullback_sieve(C, f, sieves[i]);
            auto slot = covers_[index(pb.root())][lattice_->id(pb)];
            if (!slot) {
              slot = true;
              changed = true;
            }
          }
        }
      }
      for (std::size_t c = 0; c < covers_.size(); ++c) {
        const auto obj = object_at(c);
        const auto sieves = lattice_->sieves(obj);
        for (std::size_t i = 0; i < sieves.size(); ++i) {
          if (covers_[c][i]) continue;
          if (covers_[c][lattice_->id(transitivity_witness(sieves[i]))]) {
            covers_[c][i] = true;
            changed = true;
          }
        }
      }
    }
    return GrothendieckTopology(lattice_, covers_);
  }

  static GrothendieckTopology from_flags(std::shared_ptr<const SieveLattice> lattice,
                                         std::vector<std::vector<bool>> covers) {
    return GrothendieckTopology(std::move(lattice), std::move(covers));
  }

  static const std::vector<std::vector<bool>>& flags(const GrothendieckTopology& J) { return J.covers_; }

 private:
  // {f into root(R) | f*(R) currently covers}; R must cover iff this does.
  Sieve transitivity_witness(const Sieve& R) const {
    const auto& C = lattice_->category();
    SieveMask m = 0;
    const auto fan = C.fan_in(R.root());
    for (std::size_t p = 0; p < fan.size(); ++p) {
      const Sieve pb = pullback_sieve(C, fan[p], R);
      if (covers_[index(pb.root())][lattice_->id(pb)]) m |= SieveMask{1} << p;
    }
    return Sieve(R.root(), m);
  }

  std::shared_ptr<const SieveLattice> lattice_;
  std::vector<std::vector<bool>> covers_;
};

TopologyVerdict check_topology(const SieveLattice& lattice, std::span<const Sieve> covering) {
  const auto& C = lattice.category();
  std::vector<std::vector<bool>> cov(C.object_count());
  for (std::size_t c = 0; c < C.object_count(); ++c) cov[c].assign(lattice.count(object_at(c)), false);
  for (const auto& S : covering) cov[index(S.root())][lattice.id(S)] = true;
  auto covered = [&](const Sieve& S) { return cov[index(S.root())][lattice.id(S)]; };

  TopologyVerdict verdict;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    if (!cov[c].back()) {
      verdict.violations.push_back({"maximality", "maximal sieve on '" + C.name(obj) + "' does not cover"});
    }
  }
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    for (const auto& S : lattice.sieves(obj)) {
      if (!covered(S)) continue;
      for (ArrowId f : C.fan_in(obj)) {
        const Sieve pb = pullback_sieve(C, f, S);
        if (!covered(pb)) {
          verdict.violations.push_back(
              {"stability", to_string(C, S) + " covers '" + C.name(obj) + "' but its pullback along '" +
                                C.name(f) + "', " + to_string(C, pb) + ", does not cover '" +
                                C.name(C.dom(f)) + "'"});
        }
      }
    }
  }
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    for (const auto& R : lattice.sieves(obj)) {
      if (covered(R)) continue;
      for (const auto& S : lattice.sieves(obj)) {
        if (!covered(S)) continue;
        bool all = true;
        for (ArrowId f : members(C, S)) {
          if (!covered(pullback_sieve(C, f, R))) {
            all = false;
            break;
          }
        }
        if (all) {
          verdict.violations.push_back({"transitivity", to_string(C, R) + " on '" + C.name(obj) +
                                                            "' is locally covering along " +
                                                            to_string(C, S) + " but does not cover"});
          break;
        }
      }
    }
  }
  return verdict;
}

GrothendieckTopology make_topology(std::shared_ptr<const SieveLattice> lattice,
                                   std::span<const Sieve> covering) {
  const auto verdict = check_topology(*lattice, covering);
  if (!verdict.ok()) {
    std::vector<std::string> msgs;
    for (const auto& v : verdict.violations) msgs.push_back(v.axiom + ": " + v.witness);
    throw LawViolation("not a Grothendieck topology:", std::move(msgs));
  }
  std::vector<std::vector<bool>> cov(lattice->category().object_count());
  for (std::size_t c = 0; c < cov.size(); ++c) cov[c].assign(lattice->count(object_at(c)), false);
  for (const auto& S : covering) cov[index(S.root())][lattice->id(S)] = true;
  return TopologyBuilder::from_flags(std::move(lattice), std::move(cov));
}

GrothendieckTopology trivial_topology(std::shared_ptr<const SieveLattice> lattice) {
  return TopologyBuilder(std::move(lattice)).saturate();
}

GrothendieckTopology generate_topology(std::shared_ptr<const SieveLattice> lattice,
                                       std::span<const Sieve> generators) {
  TopologyBuilder b(std::move(lattice));
  for (const auto& S : generators) b.add(S);
  return b.saturate();
}

GrothendieckTopology generate_topology(const GrothendieckTopology& base,
                                       std::span<const Sieve> generators) {
  TopologyBuilder b(base.lattice());
  b.add_all(base);
  for (const auto& S : generators) b.add(S);
  return b.saturate();
}

GrothendieckTopology join(const GrothendieckTopology& a, const GrothendieckTopology& b) {
  TopologyBuilder builder(a.lattice());
  builder.add_all(a);
  builder.add_all(b);
  return builder.saturate();
}

Sieve closure(const GrothendieckTopology& J, const Sieve& S) {
  const auto& C = J.category();
  SieveMask m = 0;
  const auto fan = C.fan_in(S.root());
  for (std::size_t p = 0; p < fan.size(); ++p) {
    if (J.covers(pullback_sieve(C, fan[p], S))) m |= SieveMask{1} << p;
  }
  return Sieve(S.root(), m);
}

bool is_closed(const GrothendieckTopology& J, const Sieve& S) { return closure(J, S) == S; }

std::vector<Sieve> closed_sieves(const GrothendieckTopology& J, ObjectId c) {
  std::vector<Sieve> out;
  for (const auto& S : J.lattice()->sieves(c)) {
    if (is_closed(J, S)) out.push_back(S);
  }
  return out;
}

std::vector<GrothendieckTopology> enumerate_topologies(std::shared_ptr<const SieveLattice> lattice) {
  const auto& C = lattice->category();
  if (C.arrow_count() > lattice->caps().max_enum_arrows) {
    throw CapExceeded("topology enumeration needs at most " + std::to_string(lattice->caps().max_enum_arrows) +
                      " arrows; category has " + std::to_string(C.arrow_count()));
  }
  // Every topology is reachable from the trivial one by adding one sieve at a
  // time and saturating.
  std::map<std::vector<std::vector<bool>>, GrothendieckTopology> seen;
  std::deque<GrothendieckTopology> queue;
  auto start = trivial_topology(lattice);
  seen.emplace(TopologyBuilder::flags(start), start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto J = std::move(queue.front());
    queue.pop_front();
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      for (const auto& S : lattice->sieves(object_at(c))) {
        if (J.covers(S)) continue;
        const Sieve gen[] = {S};
        auto K = generate_topology(J, gen);
        if (seen.emplace(TopologyBuilder::flags(K), K).second) queue.push_back(std::move(K));
      }
    }
  }
  std::vector<GrothendieckTopology> out;
  for (auto& [flags, J] : seen) out.push_back(J);
  std::ranges::stable_sort(out, [](const auto& a, const auto& b) { return a.covering_count() < b.covering_count(); });
  return out;
}

}  // namespace sheafcalc
