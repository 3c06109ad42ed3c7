#include "ncp/combinatorics.hpp"

#include "ncp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ncp {

namespace {

std::string describe_guard(const char* what, int value, int bound) {
    std::ostringstream out;
    out << what << " " << value << " exceeds guard " << bound;
    return out.str();
}

bool blocks_noncrossing(const std::vector<std::vector<int>>& blocks, int legs) {
    std::vector<int> owner(legs + 1, -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int e : blocks[i]) owner[e] = static_cast<int>(i);
    std::vector<int> seen(blocks.size(), 0);
    std::vector<int> stack;
    for (int leg = 1; leg <= legs; ++leg) {
        int b = owner[leg];
        if (seen[b] == 0)
            stack.push_back(b);
        else if (stack.empty() || stack.back() != b)
            return false;
        ++seen[b];
        if (seen[b] == static_cast<int>(blocks[b].size()) && stack.back() == b)
            stack.pop_back();
    }
    return true;
}

struct Interval {
    int lo, hi;
};

void generate(std::vector<Interval>& pending, std::vector<std::vector<int>>& acc,
              const std::function<void(const NoncrossingPartition&)>& visit) {
    if (pending.empty()) {
        visit(NoncrossingPartition::from_blocks(acc));
        return;
    }
    Interval iv = pending.back();
    pending.pop_back();
    int span = iv.hi - iv.lo;  // candidates lo+1 .. hi
    for (unsigned mask = 0; mask < (1u << span); ++mask) {
        std::vector<int> block{iv.lo};
        for (int j = 0; j < span; ++j)
            if (mask & (1u << j)) block.push_back(iv.lo + 1 + j);
        std::size_t depth = pending.size();
        for (std::size_t t = 0; t + 1 < block.size(); ++t)
            if (block[t] + 1 < block[t + 1])
                pending.push_back({block[t] + 1, block[t + 1] - 1});
        if (block.back() < iv.hi) pending.push_back({block.back() + 1, iv.hi});
        acc.push_back(std::move(block));
        generate(pending, acc, visit);
        acc.pop_back();
        pending.resize(depth);
    }
    pending.push_back(iv);
}

} // namespace

void visit_ncp(int n, const std::function<void(const NoncrossingPartition&)>& visit) {
    if (n > guards().enumerate_legs)
        throw DegreeOverflow(describe_guard("legs", n, guards().enumerate_legs));
    if (n == 0) {
        visit(NoncrossingPartition());
        return;
    }
    std::vector<Interval> pending{{1, n}};
    std::vector<std::vector<int>> acc;
    generate(pending, acc, visit);
}

std::vector<NoncrossingPartition> enumerate_ncp(int n) {
    std::vector<NoncrossingPartition> all;
    visit_ncp(n, [&](const NoncrossingPartition& p) { all.push_back(p); });
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.block_count() != b.block_count()) return a.block_count() < b.block_count();
        return a.text() < b.text();
    });
    return all;
}

NoncrossingPartition singletons(int n) {
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i});
    return NoncrossingPartition::from_blocks(std::move(blocks));
}

NoncrossingPartition one_block(int n) {
    if (n == 0) return NoncrossingPartition();
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 1);
    return NoncrossingPartition::from_blocks({b});
}

bool nesting_leq(const NoncrossingPartition& p, int b, int bp) {
    const auto& outer = p.block(b);
    const auto& inner = p.block(bp);
    return outer.front() <= inner.front() && inner.back() <= outer.back();
}

std::vector<int> base_blocks(const NoncrossingPartition& p) {
    std::vector<int> base;
    int k = p.block_count();
    for (int j = 0; j < k; ++j) {
        bool minimal = true;
        for (int i = 0; i < k && minimal; ++i)
            if (i != j && nesting_leq(p, i, j)) minimal = false;
        if (minimal) base.push_back(j);
    }
    return base;
}

std::vector<int> nesting_parents(const NoncrossingPartition& p) {
    int k = p.block_count();
    std::vector<int> parent(k, -1);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) {
            if (i == j || !nesting_leq(p, i, j)) continue;
            if (parent[j] == -1 || p.block(i).front() > p.block(parent[j]).front())
                parent[j] = i;
        }
    return parent;
}

std::vector<std::vector<int>> ideals(const NoncrossingPartition& p) {
    int k = p.block_count();
    if (k > guards().ideal_blocks)
        throw DegreeOverflow(describe_guard("blocks", k, guards().ideal_blocks));
    std::vector<std::uint32_t> above(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (nesting_leq(p, i, j)) above[i] |= 1u << j;
    std::vector<std::vector<int>> result;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        bool closed = true;
        for (int i = 0; i < k && closed; ++i)
            if ((mask >> i) & 1u)
                if ((above[i] & ~mask) != 0) closed = false;
        if (!closed) continue;
        std::vector<int> subset;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1u) subset.push_back(i);
        result.push_back(std::move(subset));
    }
    return result;
}

std::vector<NoncrossingPartition> restrict_blocks(const NoncrossingPartition& p,
                                                  const std::vector<int>& blocks) {
    std::vector<int> legs;
    for (int b : blocks)
        legs.insert(legs.end(), p.block(b).begin(), p.block(b).end());
    std::sort(legs.begin(), legs.end());
    // Maximal integer intervals of the covered legs.
    std::vector<std::pair<int, int>> runs;  // [start index, end index) into legs
    for (std::size_t i = 0; i < legs.size();) {
        std::size_t j = i + 1;
        while (j < legs.size() && legs[j] == legs[j - 1] + 1) ++j;
        runs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }
    std::vector<int> run_of_leg(p.legs() + 1, -1), pos_of_leg(p.legs() + 1, 0);
    for (std::size_t r = 0; r < runs.size(); ++r)
        for (int t = runs[r].first; t < runs[r].second; ++t) {
            run_of_leg[legs[t]] = static_cast<int>(r);
            pos_of_leg[legs[t]] = t - runs[r].first + 1;
        }
    std::vector<std::vector<std::vector<int>>> factors(runs.size());
    std::vector<int> sorted_blocks = blocks;
    std::sort(sorted_blocks.begin(), sorted_blocks.end(),
              [&](int a, int b) { return p.block(a).front() < p.block(b).front(); });
    for (int b : sorted_blocks) {
        int r = run_of_leg[p.block(b).front()];
        std::vector<int> relabeled;
        for (int e : p.block(b)) {
            if (run_of_leg[e] != r)
                throw Error("block straddles two components of the restriction");
            relabeled.push_back(pos_of_leg[e]);
        }
        factors[r].push_back(std::move(relabeled));
    }
    std::vector<NoncrossingPartition> result;
    for (auto& f : factors)
        result.push_back(NoncrossingPartition::from_blocks(std::move(f)));
    return result;
}

NoncrossingPartition restrict_class(const NoncrossingPartition& p,
                                    const std::vector<int>& blocks) {
    std::vector<int> legs;
    for (int b : blocks)
        legs.insert(legs.end(), p.block(b).begin(), p.block(b).end());
    std::sort(legs.begin(), legs.end());
    std::vector<int> pos(p.legs() + 1, 0);
    for (std::size_t t = 0; t < legs.size(); ++t) pos[legs[t]] = static_cast<int>(t) + 1;
    std::vector<std::vector<int>> relabeled;
    for (int b : blocks) {
        std::vector<int> nb;
        for (int e : p.block(b)) nb.push_back(pos[e]);
        relabeled.push_back(std::move(nb));
    }
    return NoncrossingPartition::from_blocks(std::move(relabeled));
}

NoncrossingPartition quotient(const NoncrossingPartition& p, const BlockEquivalence& e) {
    std::vector<std::vector<int>> fused;
    for (const auto& cls : e.classes) {
        std::vector<int> u;
        for (int b : cls) u.insert(u.end(), p.block(b).begin(), p.block(b).end());
        std::sort(u.begin(), u.end());
        fused.push_back(std::move(u));
    }
    if (!blocks_noncrossing(fused, p.legs())) {
        std::ostringstream out;
        out << "fusion of " << p.text() << " crosses";
        throw NotContractible(out.str());
    }
    return NoncrossingPartition::from_blocks(std::move(fused));
}

std::vector<BlockEquivalence> contractible_equivalences(const NoncrossingPartition& p) {
    int k = p.block_count();
    if (k > guards().equivalence_blocks)
        throw DegreeOverflow(describe_guard("blocks", k, guards().equivalence_blocks));
    std::vector<BlockEquivalence> result;
    if (k == 0) {
        result.push_back(BlockEquivalence{});
        return result;
    }
    std::vector<int> rgs(k, 0);
    auto emit = [&]() {
        int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> cls(classes);
        for (int i = 0; i < k; ++i) cls[rgs[i]].push_back(i);
        std::vector<std::vector<int>> fused(classes);
        for (int c = 0; c < classes; ++c) {
            for (int b : cls[c])
                fused[c].insert(fused[c].end(), p.block(b).begin(), p.block(b).end());
            std::sort(fused[c].begin(), fused[c].end());
        }
        if (blocks_noncrossing(fused, p.legs()))
            result.push_back(BlockEquivalence::from_classes(std::move(cls)));
    };
    // Restricted growth strings enumerate set partitions of the block set.
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == k) {
            emit();
            return;
        }
        for (int c = 0; c <= max_used + 1; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(max_used, c));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    std::sort(result.begin(), result.end());
    return result;
}

BlockEquivalence adjacency_classes(const NoncrossingPartition& p) {
    int k = p.block_count();
    std::vector<int> dsu(k);
    std::iota(dsu.begin(), dsu.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return dsu[x] == x ? x : dsu[x] = find(dsu[x]);
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && p.block(i).back() + 1 == p.block(j).front())
                dsu[find(i)] = find(j);
    std::vector<std::vector<int>> cls(k);
    for (int i = 0; i < k; ++i) cls[find(i)].push_back(i);
    std::vector<std::vector<int>> nonempty;
    for (auto& c : cls)
        if (!c.empty()) nonempty.push_back(std::move(c));
    return BlockEquivalence::from_classes(std::move(nonempty));
}

std::vector<std::pair<int, int>> close_pairs(const NoncrossingPartition& p) {
    BlockEquivalence adj = adjacency_classes(p);
    int k = p.block_count();
    std::vector<int> cls(k, -1);
    for (std::size_t c = 0; c < adj.classes.size(); ++c)
        for (int b : adj.classes[c]) cls[b] = static_cast<int>(c);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (cls[i] == cls[j] && p.block(i).back() < p.block(j).front())
                pairs.emplace_back(i, j);
    return pairs;
}

std::vector<std::pair<int, int>> nested_pairs(const NoncrossingPartition& p) {
    std::vector<int> parent = nesting_parents(p);
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < p.block_count(); ++j)
        if (parent[j] != -1) pairs.emplace_back(parent[j], j);
    return pairs;
}

NoncrossingPartition merge_pair(const NoncrossingPartition& p, int b, int bp) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged(p.block(b));
    merged.insert(merged.end(), p.block(bp).begin(), p.block(bp).end());
    std::sort(merged.begin(), merged.end());
    blocks.push_back(std::move(merged));
    for (int i = 0; i < p.block_count(); ++i)
        if (i != b && i != bp) blocks.push_back(p.block(i));
    for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    if (!blocks_noncrossing(blocks, p.legs()))
        throw NotContractible("merged pair crosses");
    return NoncrossingPartition::from_blocks(std::move(blocks));
}

Integer linear_extension_count(const NoncrossingPartition& p) {
    int k = p.block_count();
    if (k > guards().extension_blocks)
        throw DegreeOverflow(describe_guard("blocks", k, guards().extension_blocks));
    std::vector<int> parent = nesting_parents(p);
    std::vector<Integer> subtree(k, 1);
    // Children have larger minima, so a reverse sweep over the canonical
    // order accumulates subtree sizes bottom-up.
    for (int j = k - 1; j >= 0; --j)
        if (parent[j] != -1) subtree[parent[j]] += subtree[j];
    Integer le = factorial(k);
    for (int j = 0; j < k; ++j) le /= subtree[j];
    return le;
}

Integer linear_extension_count_brute(const NoncrossingPartition& p) {
    int k = p.block_count();
    std::vector<std::pair<int, int>> strict;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && nesting_leq(p, i, j)) strict.emplace_back(i, j);
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    Integer count = 0;
    std::vector<int> where(k);
    do {
        for (int t = 0; t < k; ++t) where[pos[t]] = t;
        bool ok = true;
        for (const auto& [a, b] : strict)
            if (where[a] > where[b]) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return count;
}

} // namespace ncp
