#include "hkc/perm_group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hkc/errors.hpp"

namespace hkc {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (std::uint32_t x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

using ImageSet = std::unordered_set<std::vector<std::uint32_t>, VecHash>;

std::vector<std::uint32_t> compose_images(const std::vector<std::uint32_t>& outer,
                                          const std::vector<std::uint32_t>& inner) {
  std::vector<std::uint32_t> out(outer.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw Error(errc::bad_parameter, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

struct PermutationGroup::Cache {
  std::once_flag once;
  std::vector<Permutation> elements;
  std::atomic<bool> filled{false};
};

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (generators_.empty())
    throw Error(errc::empty_generator_list, "a group needs at least one generator");
  degree_ = generators_.front().degree();
  if (degree_ == 0) throw Error(errc::bad_parameter, "degree must be positive");
  for (const Permutation& p : generators_)
    if (p.degree() != degree_)
      throw Error(errc::degree_mismatch, "generators act on different point sets");
}

const std::vector<Permutation>& PermutationGroup::elements(std::uint64_t cap) const {
  std::call_once(cache_->once, [&] {
    ImageSet seen;
    std::deque<std::vector<std::uint32_t>> queue;
    std::vector<std::uint32_t> id(degree_);
    std::iota(id.begin(), id.end(), 0u);
    seen.insert(id);
    queue.push_back(std::move(id));
    while (!queue.empty()) {
      std::vector<std::uint32_t> u = std::move(queue.front());
      queue.pop_front();
      for (const Permutation& gen : generators_) {
        std::vector<std::uint32_t> w = compose_images(u, gen.images());
        if (seen.insert(w).second) {
          if (seen.size() > cap)
            throw Error(errc::order_exceeds_cap,
                        "group closure exceeds the element cap of " + std::to_string(cap));
          queue.push_back(std::move(w));
        }
      }
    }
    std::vector<Permutation> out;
    out.reserve(seen.size());
    for (auto it = seen.begin(); it != seen.end();)
      out.push_back(Permutation(std::move(seen.extract(it++).value())));
    std::sort(out.begin(), out.end());
    cache_->elements = std::move(out);
    cache_->filled.store(true, std::memory_order_release);
  });
  if (cache_->elements.size() > cap)
    throw Error(errc::order_exceeds_cap,
                "group order " + std::to_string(cache_->elements.size()) +
                    " exceeds the element cap of " + std::to_string(cap));
  return cache_->elements;
}

std::uint64_t PermutationGroup::order(std::uint64_t cap) const { return elements(cap).size(); }

bool PermutationGroup::contains(const Permutation& p, std::uint64_t cap) const {
  if (p.degree() != degree_)
    throw Error(errc::degree_mismatch, "membership test across different degrees");
  const auto& els = elements(cap);
  return std::binary_search(els.begin(), els.end(), p);
}

std::optional<std::uint64_t> PermutationGroup::cached_order() const {
  if (cache_->filled.load(std::memory_order_acquire)) return cache_->elements.size();
  return std::nullopt;
}

KSubsetOrbitReport orbits_on_k_subsets(const PermutationGroup& g, std::size_t k,
                                       std::uint64_t subset_budget) {
  const std::size_t n = g.degree();
  if (k > n)
    throw Error(errc::degree_too_large,
                "subset size " + std::to_string(k) + " exceeds the degree " + std::to_string(n));

  // Saturating binomial: anything past uint64 certainly busts the budget.
  std::uint64_t subset_count;
  {
    unsigned __int128 c = 1;
    const auto lim =
        static_cast<unsigned __int128>(std::numeric_limits<std::uint64_t>::max());
    std::size_t kk = std::min(k, n - k);
    bool saturated = false;
    for (std::size_t i = 1; i <= kk; ++i) {
      c = c * (n - kk + i) / i;
      if (c > lim) {
        saturated = true;
        break;
      }
    }
    subset_count = saturated ? std::numeric_limits<std::uint64_t>::max()
                             : static_cast<std::uint64_t>(c);
  }
  if (subset_count > subset_budget)
    throw Error(errc::subset_budget_exceeded,
                "binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                    ") exceeds the subset budget of " + std::to_string(subset_budget));

  KSubsetOrbitReport report;
  report.k = k;
  report.subset_count = subset_count;

  ImageSet assigned;
  std::vector<std::uint32_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0u);

  // Lexicographic sweep over all k-subsets: the first unassigned subset of
  // each orbit is its least member, so representatives come out sorted.
  bool more = k <= n;
  while (more) {
    if (!assigned.contains(subset)) {
      std::uint64_t size = 0;
      std::deque<std::vector<std::uint32_t>> queue;
      assigned.insert(subset);
      queue.push_back(subset);
      ++size;
      while (!queue.empty()) {
        std::vector<std::uint32_t> s = std::move(queue.front());
        queue.pop_front();
        for (const Permutation& gen : g.generators()) {
          std::vector<std::uint32_t> t(k);
          for (std::size_t i = 0; i < k; ++i) t[i] = gen(s[i]);
          std::sort(t.begin(), t.end());
          if (assigned.insert(t).second) {
            ++size;
            queue.push_back(std::move(t));
          }
        }
      }
      report.representatives.push_back(subset);
      report.orbit_sizes.push_back(size);
    }
    // advance to the next k-subset
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) {
      more = false;
    } else {
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }

  report.orbit_count = report.representatives.size();
  return report;
}

HomogeneityProfile homogeneity_profile(const PermutationGroup& g,
                                       std::uint64_t subset_budget) {
  const std::size_t n = g.degree();
  HomogeneityProfile profile;
  profile.orbit_counts.assign(n + 1, 0);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::uint64_t count = orbits_on_k_subsets(g, k, subset_budget).orbit_count;
    profile.orbit_counts[k] = count;
    profile.orbit_counts[n - k] = count;  // complement bijection
  }
  profile.all_transitive = std::all_of(profile.orbit_counts.begin(),
                                       profile.orbit_counts.end(),
                                       [](std::uint64_t c) { return c == 1; });
  return profile;
}

ConjugacyClasses conjugacy_classes(const PermutationGroup& g, std::uint64_t cap) {
  const auto& els = g.elements(cap);
  std::vector<Permutation> gen_inverses;
  for (const Permutation& gen : g.generators()) gen_inverses.push_back(gen.inverse());

  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(els.begin(), els.end(), p);
    return static_cast<std::size_t>(it - els.begin());
  };

  ConjugacyClasses cc;
  std::vector<char> assigned(els.size(), 0);
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (assigned[i]) continue;
    std::uint64_t size = 0;
    std::deque<std::size_t> queue;
    assigned[i] = 1;
    queue.push_back(i);
    ++size;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        Permutation conj = gen_inverses[gi] * els[u] * g.generators()[gi];
        std::size_t vi = index_of(conj);
        if (!assigned[vi]) {
          assigned[vi] = 1;
          ++size;
          queue.push_back(vi);
        }
      }
    }
    cc.representatives.push_back(els[i]);
    cc.sizes.push_back(size);
  }
  return cc;
}

std::vector<Permutation> centralizer(const PermutationGroup& g, const Permutation& a,
                                     std::uint64_t cap) {
  if (a.degree() != g.degree())
    throw Error(errc::degree_mismatch, "centralizer argument has the wrong degree");
  std::vector<Permutation> out;
  for (const Permutation& e : g.elements(cap))
    if (a * e == e * a) out.push_back(e);
  return out;
}

std::size_t pair_orbit_count(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw Error(errc::degree_mismatch, "pair orbit count across different degrees");
  const std::size_t n = a.degree();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    unite(i, a(i));
    unite(i, b(i));
  }
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

std::map<std::size_t, std::uint64_t> commuting_pair_orbit_histogram(
    const PermutationGroup& g, std::uint64_t cap) {
  ConjugacyClasses cc = conjugacy_classes(g, cap);
  std::map<std::size_t, std::uint64_t> hist;
  for (std::size_t c = 0; c < cc.representatives.size(); ++c) {
    const Permutation& a = cc.representatives[c];
    for (const Permutation& h : centralizer(g, a, cap))
      hist[pair_orbit_count(a, h)] += cc.sizes[c];
  }
  return hist;
}

namespace {

// Subgroups in the exhaustive scan are sorted element-image lists.
using RawSub = std::vector<std::vector<std::uint32_t>>;

RawSub close_raw(const std::vector<std::vector<std::uint32_t>>& gens, std::size_t n) {
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    std::vector<std::uint32_t> u = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : gens) {
      std::vector<std::uint32_t> w = compose_images(u, gen);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return RawSub(seen.begin(), seen.end());
}

}  // namespace

std::vector<SubgroupScanEntry> subgroup_scan(std::size_t n) {
  if (n == 0) throw Error(errc::bad_parameter, "degree must be positive");
  if (n > 5)
    throw Error(errc::degree_too_large,
                "exhaustive subgroup scan is limited to degree 5, got " + std::to_string(n));

  std::vector<std::vector<std::uint32_t>> all;
  {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  // BFS over subgroups: extend each known subgroup by each outside element.
  // Generating sets grow by one per extension, so closure stays cheap.
  std::map<RawSub, std::vector<std::vector<std::uint32_t>>> seen;  // subgroup -> gens
  std::deque<const RawSub*> queue;
  {
    RawSub trivial = close_raw({all.front()}, n);  // all.front() is the identity
    auto it = seen.emplace(std::move(trivial),
                           std::vector<std::vector<std::uint32_t>>{all.front()}).first;
    queue.push_back(&it->first);
  }
  while (!queue.empty()) {
    const RawSub* h = queue.front();
    queue.pop_front();
    std::vector<std::vector<std::uint32_t>> base_gens = seen.at(*h);
    for (const auto& x : all) {
      if (std::binary_search(h->begin(), h->end(), x)) continue;
      auto gens = base_gens;
      gens.push_back(x);
      RawSub k = close_raw(gens, n);
      auto [it, inserted] = seen.emplace(std::move(k), std::move(gens));
      if (inserted) queue.push_back(&it->first);
    }
  }

  // Group the subgroups into conjugacy classes.
  std::vector<SubgroupScanEntry> entries;
  std::set<RawSub> classified;
  for (const auto& [sub, gens_unused] : seen) {
    if (classified.contains(sub)) continue;
    std::set<RawSub> orbit;
    for (const auto& x : all) {
      std::vector<std::uint32_t> xinv(n);
      for (std::size_t i = 0; i < n; ++i) xinv[x[i]] = static_cast<std::uint32_t>(i);
      RawSub conj;
      conj.reserve(sub.size());
      for (const auto& el : sub) conj.push_back(compose_images(compose_images(x, el), xinv));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    const RawSub& canon = *orbit.begin();

    // Reduced generators: greedily take the least elements that grow the
    // closure until the whole subgroup is reached.
    std::vector<std::vector<std::uint32_t>> red;
    RawSub closed = close_raw({all.front()}, n);
    if (canon.size() == 1) {
      red.push_back(all.front());
    } else {
      for (const auto& el : canon) {
        if (std::binary_search(closed.begin(), closed.end(), el)) continue;
        red.push_back(el);
        closed = close_raw(red, n);
        if (closed.size() == canon.size()) break;
      }
    }

    SubgroupScanEntry entry;
    for (const auto& img : red) entry.generators.push_back(Permutation(img));
    entry.order = canon.size();
    entry.conjugates = orbit.size();
    entry.profile = homogeneity_profile(PermutationGroup(entry.generators));
    entries.push_back(std::move(entry));

    for (const auto& member : orbit) classified.insert(member);
  }

  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.generators < b.generators;
  });
  return entries;
}

PermutationGroup symmetric_group(std::size_t n) {
  if (n == 0) throw Error(errc::bad_parameter, "degree must be positive");
  if (n == 1) return PermutationGroup({Permutation::identity(1)});
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles("(0 1)", n));
  if (n >= 3) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
    gens.push_back(Permutation(std::move(img)));
  }
  return PermutationGroup(std::move(gens));
}

PermutationGroup alternating_group(std::size_t n) {
  if (n == 0) throw Error(errc::bad_parameter, "degree must be positive");
  if (n <= 2) return PermutationGroup({Permutation::identity(n)});
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i)
    gens.push_back(Permutation::from_cycles("(" + std::to_string(i) + " " +
                                                std::to_string(i + 1) + " " +
                                                std::to_string(i + 2) + ")",
                                            n));
  return PermutationGroup(std::move(gens));
}

PermutationGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(errc::bad_parameter, "degree must be positive");
  if (n == 1) return PermutationGroup({Permutation::identity(1)});
  std::vector<std::uint32_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>((i + 1) % n);
  return PermutationGroup({Permutation(std::move(img))});
}

PermutationGroup dihedral_group(std::size_t n) {
  if (n < 3)
    throw Error(errc::bad_parameter, "dihedral group needs degree at least 3");
  std::vector<std::uint32_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return PermutationGroup({Permutation(std::move(rot)), Permutation(std::move(refl))});
}

}  // namespace hkc
