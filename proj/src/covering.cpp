// Copyright 2026 The covercraft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covercraft/covering.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace covercraft {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchControl {
  long long node_limit;
  Clock::time_point deadline;
  long long nodes = 0;
  SearchStatus status = SearchStatus::kComplete;

  bool tick() {
    if (status != SearchStatus::kComplete) return false;
    if (++nodes > node_limit) {
      status = SearchStatus::kNodeLimit;
      return false;
    }
    if ((nodes & 1023) == 0 && Clock::now() > deadline) {
      status = SearchStatus::kTimeLimit;
      return false;
    }
    return true;
  }
};

SearchControl make_control(const SearchBudget& budget) {
  if (budget.node_limit <= 0 || budget.time_limit_sec <= 0)
    throw std::invalid_argument("search budget must be positive");
  return SearchControl{budget.node_limit,
                       Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(budget.time_limit_sec))};
}

struct Candidate {
  int subgroup_id;
  long rep;
  Bitset members;
  long size;
};

// Decreasing size, then bitset order; fully deterministic.
void sort_candidates(std::vector<Candidate>& cands) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.members < b.members;
  });
}

std::vector<std::vector<int>> candidates_by_element(const std::vector<Candidate>& cands,
                                                    long order) {
  std::vector<std::vector<int>> at(static_cast<std::size_t>(order));
  for (int i = 0; i < static_cast<int>(cands.size()); ++i)
    cands[static_cast<std::size_t>(i)].members.for_each_set(
        [&](std::size_t e) { at[e].push_back(i); });
  return at;
}

std::size_t count_uncovered(const Bitset& target, const Bitset& covered) {
  std::size_t c = 0;
  target.for_each_set([&](std::size_t e) {
    if (!covered.test(e)) ++c;
  });
  return c;
}

/// Depth-first minimal-cover search. Branches on the minimal-index uncovered
/// element of the target; candidates tried earlier at a node are banned from
/// the sibling subtrees, so every candidate set is visited at most once.
/// `accept` sees the chosen candidate ids once the target is covered and
/// applies the mode-specific validity checks.
template <typename Accept>
bool cover_dfs(const std::vector<Candidate>& cands,
               const std::vector<std::vector<int>>& at, const Bitset& target,
               long max_candidate_size, int k, SearchControl& control,
               Bitset& covered, std::vector<int>& chosen, std::vector<char>& banned,
               bool prune_early_complete, Accept&& accept) {
  if (!control.tick()) return false;
  std::size_t e = target.first_not_covered_by(covered);
  if (e == Bitset::npos) {
    // A system that covers before its last slot cannot be extended to an
    // irredundant one; smaller sizes were exhausted in earlier rounds.
    if (prune_early_complete && static_cast<int>(chosen.size()) < k) return false;
    return accept(chosen);
  }
  int remaining = k - static_cast<int>(chosen.size());
  if (remaining == 0) return false;
  if (count_uncovered(target, covered) >
      static_cast<std::size_t>(remaining) * static_cast<std::size_t>(max_candidate_size))
    return false;

  std::vector<int> banned_here;
  bool found = false;
  for (int c : at[e]) {
    if (banned[static_cast<std::size_t>(c)]) continue;
    Bitset saved = covered;
    covered |= cands[static_cast<std::size_t>(c)].members;
    chosen.push_back(c);
    found = cover_dfs(cands, at, target, max_candidate_size, k, control, covered,
                      chosen, banned, prune_early_complete, accept);
    chosen.pop_back();
    covered = saved;
    if (found || control.status != SearchStatus::kComplete) break;
    banned[static_cast<std::size_t>(c)] = 1;
    banned_here.push_back(c);
  }
  for (int c : banned_here) banned[static_cast<std::size_t>(c)] = 0;
  return found;
}

CosetSystem system_from(const FiniteAbelianGroup& group,
                        const std::vector<Subgroup>& subs,
                        const std::vector<Candidate>& cands,
                        const std::vector<int>& chosen) {
  CosetSystem out{group, {}};
  for (int c : chosen) {
    const Candidate& cand = cands[static_cast<std::size_t>(c)];
    out.cosets.emplace_back(subs[static_cast<std::size_t>(cand.subgroup_id)], cand.rep);
  }
  return out;
}

int default_max_cosets(const FiniteAbelianGroup& group, const SearchBudget& budget) {
  if (budget.max_cosets > 0) return budget.max_cosets;
  return tau_of(group.order()) + 2;
}

/// All cosets of one subgroup, in ascending representative order.
void append_cosets(const Subgroup& h, bool skip_identity_coset,
                   std::vector<Candidate>& out, int subgroup_id) {
  const FiniteAbelianGroup& g = h.group();
  Bitset seen(static_cast<std::size_t>(g.order()));
  for (long x = 0; x < g.order(); ++x) {
    if (seen.test(static_cast<std::size_t>(x))) continue;
    Coset coset(h, x);
    seen |= coset.member_bits();
    if (skip_identity_coset && coset.contains(0)) continue;
    out.push_back(Candidate{subgroup_id, coset.representative_index(),
                            coset.member_bits(), coset.size()});
  }
}

}  // namespace

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kComplete: return "complete";
    case SearchStatus::kNodeLimit: return "node-limit";
    case SearchStatus::kTimeLimit: return "time-limit";
    case SearchStatus::kCosetCap: return "coset-cap";
  }
  return "unknown";
}

CoverReport audit(const CosetSystem& system, const Bitset& target) {
  const FiniteAbelianGroup& g = system.group;
  if (static_cast<long>(target.size()) != g.order())
    throw std::invalid_argument("target bitset size does not match group order");
  for (const Coset& c : system.cosets)
    if (c.subgroup().group() != g)
      throw std::invalid_argument("coset from a different group");

  Bitset covered(static_cast<std::size_t>(g.order()));
  for (const Coset& c : system.cosets) covered |= c.member_bits();

  // Empty intersection convention: over no members the intersection is G.
  CoverReport report{false, std::nullopt, {},
                     Subgroup(g, Bitset(static_cast<std::size_t>(g.order()), true))};
  std::size_t witness = target.first_not_covered_by(covered);
  report.covers_target = witness == Bitset::npos;
  if (!report.covers_target) report.uncovered_witness = static_cast<long>(witness);

  if (!system.cosets.empty()) {
    std::vector<Subgroup> subs;
    subs.reserve(system.cosets.size());
    for (const Coset& c : system.cosets) subs.push_back(c.subgroup());
    report.subgroup_intersection = intersect_subgroups(subs);
  }

  // A member is removable when every target element it covers is covered at
  // least twice.
  std::vector<int> counts(static_cast<std::size_t>(g.order()), 0);
  for (const Coset& c : system.cosets)
    c.member_bits().for_each_set([&](std::size_t e) {
      if (target.test(e)) ++counts[e];
    });
  for (int i = 0; i < static_cast<int>(system.cosets.size()); ++i) {
    bool removable = true;
    system.cosets[static_cast<std::size_t>(i)].member_bits().for_each_set(
        [&](std::size_t e) {
          if (target.test(e) && counts[e] < 2) removable = false;
        });
    if (removable) report.removable_indices.push_back(i);
  }
  return report;
}

CoverSearchResult phi(const FiniteAbelianGroup& group, const SearchBudget& budget) {
  CoverSearchResult result;
  if (group.order() == 1) {
    result.attained = true;
    result.value = 0;
    result.witness = CosetSystem{group, {}};
    return result;
  }

  std::vector<Subgroup> subs = enumerate_subgroups(group);
  std::vector<Candidate> cands;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i)
    append_cosets(subs[static_cast<std::size_t>(i)], /*skip_identity_coset=*/true, cands, i);

  // Pure covering question: a coset contained in another can always be
  // replaced by the larger one, so only the maximal candidates matter.
  std::vector<Candidate> maximal;
  for (const Candidate& c : cands) {
    bool dominated = false;
    for (const Candidate& d : cands)
      if (c.size < d.size && c.members.is_subset_of(d.members)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(c);
  }
  sort_candidates(maximal);

  Bitset target(static_cast<std::size_t>(group.order()), true);
  target.set(0, false);
  std::vector<std::vector<int>> at = candidates_by_element(maximal, group.order());
  long max_size = 0;
  for (const Candidate& c : maximal) max_size = std::max(max_size, c.size);

  SearchControl control = make_control(budget);
  int cap = default_max_cosets(group, budget);
  for (int k = 1; k <= cap; ++k) {
    Bitset covered(static_cast<std::size_t>(group.order()));
    std::vector<int> chosen;
    std::vector<char> banned(maximal.size(), 0);
    bool found = cover_dfs(maximal, at, target, max_size, k, control, covered, chosen,
                           banned, /*prune_early_complete=*/false,
                           [&](const std::vector<int>& ids) {
                             result.witness = system_from(group, subs, maximal, ids);
                             return true;
                           });
    result.nodes_expanded = control.nodes;
    if (found) {
      result.attained = true;
      result.value = static_cast<int>(result.witness->cosets.size());
      if (result.value != tau_of(group.order()))
        throw std::logic_error("phi search disagrees with tau");
      return result;
    }
    if (control.status != SearchStatus::kComplete) {
      result.status = control.status;
      result.value = k;  // every smaller size was exhausted
      return result;
    }
  }
  result.status = SearchStatus::kCosetCap;
  result.value = cap + 1;
  result.nodes_expanded = control.nodes;
  return result;
}

CosetSystem punctured_cover_construct(const FiniteAbelianGroup& group) {
  CosetSystem out{group, {}};
  if (group.order() == 1) return out;
  std::vector<Subgroup> subs = enumerate_subgroups(group);

  // Peel prime-index layers: cover everything outside a subgroup B of index p
  // by the p-1 nontrivial cosets of B, then recurse into B.
  Bitset current(static_cast<std::size_t>(group.order()), true);
  long current_size = group.order();
  while (current_size > 1) {
    long p = factorize(current_size)[0].first;
    const Subgroup* b = nullptr;
    for (const Subgroup& h : subs)
      if (h.size() == current_size / p && h.member_bits().is_subset_of(current)) {
        b = &h;
        break;
      }
    if (!b) throw std::logic_error("no subgroup of prime index inside the current layer");

    Bitset covered = b->member_bits();
    for (long x = 0; x < group.order(); ++x) {
      if (!current.test(static_cast<std::size_t>(x)) ||
          covered.test(static_cast<std::size_t>(x)))
        continue;
      Coset coset(*b, x);
      covered |= coset.member_bits();
      out.cosets.push_back(std::move(coset));
    }
    current = b->member_bits();
    current_size = b->size();
  }

  if (static_cast<int>(out.cosets.size()) != tau_of(group.order()))
    throw std::logic_error("punctured cover construction produced the wrong count");
  Bitset target(static_cast<std::size_t>(group.order()), true);
  target.set(0, false);
  Bitset union_bits(static_cast<std::size_t>(group.order()));
  for (const Coset& c : out.cosets) union_bits |= c.member_bits();
  if (!audit(out, target).covers_target || union_bits.test(0))
    throw std::logic_error("punctured cover construction missed the target");
  return out;
}

CoverSearchResult min_trivial_intersection_cover(const FiniteAbelianGroup& group,
                                                 CoverMode mode,
                                                 const SearchBudget& budget) {
  CoverSearchResult result;
  if (group.order() == 1) {
    Subgroup trivial(group, Bitset(1, true));
    result.attained = true;
    result.value = 1;
    result.witness = CosetSystem{group, {Coset(trivial, 0L)}};
    return result;
  }

  std::vector<Subgroup> subs = enumerate_subgroups(group);
  std::vector<Candidate> cands;
  for (int i = 0; i < static_cast<int>(subs.size()); ++i) {
    const Subgroup& h = subs[static_cast<std::size_t>(i)];
    // The whole group as a member makes every other member removable, and
    // alone it has nontrivial intersection; it never participates.
    if (h.is_whole_group()) continue;
    if (mode == CoverMode::kSubgroups)
      cands.push_back(Candidate{i, 0, h.member_bits(), h.size()});
    else
      append_cosets(h, /*skip_identity_coset=*/false, cands, i);
  }
  sort_candidates(cands);

  Bitset target(static_cast<std::size_t>(group.order()), true);
  std::vector<std::vector<int>> at = candidates_by_element(cands, group.order());
  long max_size = 0;
  for (const Candidate& c : cands) max_size = std::max(max_size, c.size);

  // No irredundant family exceeds |G| members (each needs a private element)
  // or the number of distinct candidates.
  int conclusive_cap =
      static_cast<int>(std::min<long>(group.order(), static_cast<long>(cands.size())));
  // Coset mode always attains by tau(|G|) + 1, so the automatic cap can stay
  // tight; subgroup mode must be able to exhaust every size to conclude
  // unattainability.
  int cap = budget.max_cosets > 0 ? std::min(budget.max_cosets, conclusive_cap)
            : mode == CoverMode::kSubgroups
                ? conclusive_cap
                : std::min(default_max_cosets(group, budget), conclusive_cap);

  SearchControl control = make_control(budget);
  for (int k = 1; k <= cap; ++k) {
    Bitset covered(static_cast<std::size_t>(group.order()));
    std::vector<int> chosen;
    std::vector<char> banned(cands.size(), 0);
    bool found = cover_dfs(
        cands, at, target, max_size, k, control, covered, chosen, banned,
        /*prune_early_complete=*/true, [&](const std::vector<int>& ids) {
          Bitset meet(static_cast<std::size_t>(group.order()), true);
          for (int c : ids)
            meet &= subs[static_cast<std::size_t>(
                             cands[static_cast<std::size_t>(c)].subgroup_id)]
                        .member_bits();
          if (meet.count() != 1) return false;
          CosetSystem candidate_system = system_from(group, subs, cands, ids);
          CoverReport report = audit(candidate_system, target);
          if (!report.covers_target || !report.irredundant()) return false;
          result.witness = std::move(candidate_system);
          return true;
        });
    result.nodes_expanded = control.nodes;
    if (found) {
      result.attained = true;
      result.value = k;
      return result;
    }
    if (control.status != SearchStatus::kComplete) {
      result.status = control.status;
      result.value = k;
      return result;
    }
  }
  result.nodes_expanded = control.nodes;
  if (cap == conclusive_cap) {
    result.unattainable = true;
    result.value = 0;
  } else {
    result.status = SearchStatus::kCosetCap;
    result.value = cap + 1;
  }
  return result;
}

bool verify_cover_bounds(const FiniteAbelianGroup& group, const SearchBudget& budget) {
  CoverSearchResult f = min_trivial_intersection_cover(group, CoverMode::kCosets, budget);
  if (!f.conclusive()) throw BudgetExhausted("f(G) search did not finish");
  CoverSearchResult g = min_trivial_intersection_cover(group, CoverMode::kSubgroups, budget);
  if (!g.conclusive()) throw BudgetExhausted("g(G) search did not finish");

  int bound = 1 + lambda_of(group.order());
  bool ok = f.attained && f.value >= bound;
  if (g.attained) ok = ok && g.value >= f.value && g.value >= bound;
  return ok;
}

bool verify_coset_index_bound(const CosetSystem& system) {
  Bitset target(static_cast<std::size_t>(system.group.order()), true);
  CoverReport report = audit(system, target);
  if (!report.covers_target || !report.irredundant())
    throw std::invalid_argument("system is not an irredundant covering of its group");

  long k = static_cast<long>(system.cosets.size());
  for (const Coset& c : system.cosets) {
    long index = c.subgroup().index_in_group();
    if (k < 1 + tau_of(index)) return false;
    // k >= 1 + log2(index): compare 2^(k-1) against the index
    if (k - 1 < 62 && (1LL << (k - 1)) < index) return false;
  }
  return true;
}

BlockingResult blocking_number(int n, int p, const SearchBudget& budget) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  auto factors = factorize(p);
  if (factors.size() != 1 || factors[0].second != 1)
    throw std::invalid_argument("blocking_number requires a prime p");

  FiniteAbelianGroup group{std::vector<int>(static_cast<std::size_t>(n), p)};
  long points = group.order();

  // Affine hyperplanes of AG(n, p) are the cosets of the index-p subgroups.
  std::vector<Bitset> hyperplanes;
  for (const Subgroup& h : enumerate_subgroups(group)) {
    if (h.size() != points / p) continue;
    Bitset seen(static_cast<std::size_t>(points));
    for (long x = 0; x < points; ++x) {
      if (seen.test(static_cast<std::size_t>(x))) continue;
      Coset coset(h, x);
      seen |= coset.member_bits();
      hyperplanes.push_back(coset.member_bits());
    }
  }

  std::size_t hcount = hyperplanes.size();
  std::vector<Bitset> hyps_of_point(static_cast<std::size_t>(points), Bitset(hcount));
  for (std::size_t hi = 0; hi < hcount; ++hi)
    hyperplanes[hi].for_each_set([&](std::size_t x) { hyps_of_point[x].set(hi); });

  BlockingResult result;
  SearchControl control = make_control(budget);
  Bitset all_hit(hcount, true);

  std::vector<long> chosen;
  std::vector<char> banned(static_cast<std::size_t>(points), 0);
  auto dfs = [&](auto&& self, Bitset& hit, int s) -> bool {
    if (!control.tick()) return false;
    std::size_t unhit = all_hit.first_not_covered_by(hit);
    if (unhit == Bitset::npos) return true;
    if (static_cast<int>(chosen.size()) == s) return false;
    std::vector<long> banned_here;
    bool found = false;
    for (std::size_t x = hyperplanes[unhit].find_first(); x != Bitset::npos;
         x = hyperplanes[unhit].find_next(x)) {
      if (banned[x]) continue;
      Bitset saved = hit;
      hit |= hyps_of_point[x];
      chosen.push_back(static_cast<long>(x));
      found = self(self, hit, s);
      if (found) return true;
      chosen.pop_back();
      hit = saved;
      if (control.status != SearchStatus::kComplete) break;
      banned[x] = 1;
      banned_here.push_back(static_cast<long>(x));
    }
    for (long x : banned_here) banned[static_cast<std::size_t>(x)] = 0;
    return found;
  };

  for (int s = 1; s <= points; ++s) {
    Bitset hit(hcount);
    chosen.clear();
    std::fill(banned.begin(), banned.end(), 0);
    if (dfs(dfs, hit, s)) {
      result.value = s;
      result.witness_points = chosen;
      result.nodes_expanded = control.nodes;
      if (s != 1 + n * (p - 1))
        throw std::logic_error("blocking number search disagrees with 1 + n(p-1)");
      return result;
    }
    if (control.status != SearchStatus::kComplete) {
      result.status = control.status;
      result.value = s;
      result.nodes_expanded = control.nodes;
      return result;
    }
  }
  throw std::logic_error("the full point set always blocks");
}

}  // namespace covercraft
