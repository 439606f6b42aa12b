#include "jwds/peel_state.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "jwds/error.hpp"

namespace jwds {

std::size_t PeelState::SignatureHash::operator()(const Signature& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : s) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

PeelState::PeelState(const TemporalGraph& g, SubgraphSequence seq, double lambda, PeelOptions options)
    : graph_(&g), lambda_(lambda), options_(options), seq_(std::move(seq)) {
    JWDS_EXPECTS(lambda >= 0.0, "lambda must be non-negative");
    counts_ = count_sets(g, seq_);  // validates shape and non-emptiness
    n_ = g.vertex_count();
    k_ = g.snapshot_count();
    sig_words_ = (k_ + 63) / 64;

    degree_.assign(k_ * n_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        const Snapshot& gi = g.snapshot(i);
        seq_[i].for_each([&](VertexId v) {
            degree_[i * n_ + v] = static_cast<std::uint32_t>(induced_degree(gi, seq_[i], v));
        });
    }

    signature_.assign(n_ * sig_words_, 0);
    for (std::size_t j = 0; j < k_; ++j) {
        seq_[j].for_each([&](VertexId v) { signature_[v * sig_words_ + j / 64] |= std::uint64_t{1} << (j % 64); });
    }

    group_of_.assign(k_ * n_, kNoGroup);
    active_.resize(k_);
    lookup_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) {
        seq_[i].for_each([&](VertexId v) { join_group(i, v); });
    }
}

PeelState::Signature PeelState::signature_of(VertexId v) const {
    const auto* begin = signature_.data() + static_cast<std::size_t>(v) * sig_words_;
    return Signature(begin, begin + sig_words_);
}

double PeelState::compute_jaccard_delta(std::size_t i, const Signature& sig) const {
    double delta = 0.0;
    for (std::size_t j = 0; j < k_; ++j) {
        if (j == i) continue;
        const double in = static_cast<double>(counts_.inter_at(i, j));
        const double un = static_cast<double>(counts_.uni_at(i, j));
        if (signature_bit(sig, j)) {
            delta += (in - 1.0) / un - in / un;
        } else {
            delta += in / (un - 1.0) - in / un;
        }
    }
    return delta;
}

double PeelState::gain_of(std::size_t i, std::uint32_t degree, double jaccard_delta) const noexcept {
    const double edges = static_cast<double>(counts_.edges[i]);
    const double s = static_cast<double>(counts_.sizes[i]);
    const double density_change = (edges - static_cast<double>(degree)) / (s - 1.0) - edges / s;
    return density_change + lambda_ * jaccard_delta;
}

PeelState::GroupId PeelState::find_or_create_group(std::size_t i, const Signature& sig) {
    auto& table = lookup_[i];
    if (auto it = table.find(sig); it != table.end()) return it->second;

    GroupId id;
    if (!free_groups_.empty()) {
        id = free_groups_.back();
        free_groups_.pop_back();
    } else {
        id = static_cast<GroupId>(groups_.size());
        groups_.emplace_back();
    }
    Group& grp = groups_[id];
    grp.snapshot = i;
    grp.signature = sig;
    grp.heap.clear();
    grp.live = 0;
    grp.slot = active_[i].size();
    grp.jaccard_delta = compute_jaccard_delta(i, sig);
    grp.in_use = true;
    active_[i].push_back(id);
    table.emplace(sig, id);
    delta_max_ = std::max(delta_max_, active_[i].size());
    return id;
}

void PeelState::drop_group(GroupId id) {
    Group& grp = groups_[id];
    auto& slots = active_[grp.snapshot];
    const GroupId moved = slots.back();
    slots[grp.slot] = moved;
    groups_[moved].slot = grp.slot;
    slots.pop_back();
    lookup_[grp.snapshot].erase(grp.signature);
    grp.heap.clear();
    grp.heap.shrink_to_fit();
    grp.in_use = false;
    free_groups_.push_back(id);
}

void PeelState::join_group(std::size_t i, VertexId v) {
    const GroupId id = find_or_create_group(i, signature_of(v));
    Group& grp = groups_[id];
    group_of_[i * n_ + v] = id;
    ++grp.live;
    grp.heap.push_back({degree_[i * n_ + v], v});
    std::push_heap(grp.heap.begin(), grp.heap.end(), std::greater<>{});
}

void PeelState::leave_group(std::size_t i, VertexId v) {
    const GroupId id = group_of_[i * n_ + v];
    group_of_[i * n_ + v] = kNoGroup;
    if (--groups_[id].live == 0) drop_group(id);
}

const PeelState::HeapEntry* PeelState::peek(GroupId id) {
    Group& grp = groups_[id];
    const std::size_t i = grp.snapshot;
    while (!grp.heap.empty()) {
        const HeapEntry& top = grp.heap.front();
        const std::size_t slot = i * n_ + top.vertex;
        if (group_of_[slot] == id && degree_[slot] == top.degree) return &top;
        std::pop_heap(grp.heap.begin(), grp.heap.end(), std::greater<>{});
        grp.heap.pop_back();
    }
    return nullptr;
}

Candidate PeelState::best_candidate_in_snapshot(std::size_t i) {
    JWDS_EXPECTS(i < k_, "snapshot index out of range");
    JWDS_EXPECTS(counts_.sizes[i] >= 2, "S_" + std::to_string(i) + " has fewer than two vertices");
    Candidate best{i, 0, 0.0};
    bool found = false;
    for (GroupId id : active_[i]) {
        const HeapEntry* top = peek(id);
        if (top == nullptr) continue;
        const double gain = gain_of(i, top->degree, groups_[id].jaccard_delta);
        if (!found || gain > best.gain || (gain == best.gain && top->vertex < best.vertex)) {
            best = {i, top->vertex, gain};
            found = true;
        }
    }
    JWDS_EXPECTS(found, "no queued vertex in S_" + std::to_string(i));
    return best;
}

bool PeelState::has_eligible(std::span<const bool> forbidden) const {
    for (std::size_t i = 0; i < k_; ++i) {
        if (i < forbidden.size() && forbidden[i]) continue;
        if (counts_.sizes[i] >= 2) return true;
    }
    return false;
}

Candidate PeelState::best_candidate_global(std::span<const bool> forbidden) {
    JWDS_EXPECTS(has_eligible(forbidden), "no snapshot is eligible for removal");
    Candidate best;
    bool found = false;
    for (std::size_t i = 0; i < k_; ++i) {
        if (i < forbidden.size() && forbidden[i]) continue;
        if (counts_.sizes[i] < 2) continue;
        const Candidate c = best_candidate_in_snapshot(i);
        if (!found || c.gain > best.gain) {
            best = c;
            found = true;
        }
    }
    return best;
}

void PeelState::remove(std::size_t i, VertexId v) {
    JWDS_EXPECTS(i < k_, "snapshot index out of range");
    JWDS_EXPECTS(v < n_ && seq_[i].contains(v),
                 "vertex " + std::to_string(v) + " is not in S_" + std::to_string(i));
    JWDS_EXPECTS(counts_.sizes[i] >= 2, "cannot remove the last vertex of S_" + std::to_string(i));

    leave_group(i, v);
    seq_[i].erase(v);
    --counts_.sizes[i];

    const std::size_t row = i * n_;
    counts_.edges[i] -= degree_[row + v];
    degree_[row + v] = 0;
    for (VertexId u : graph_->snapshot(i).neighbors(v)) {
        if (!seq_[i].contains(u)) continue;
        const std::uint32_t d = --degree_[row + u];
        Group& grp = groups_[group_of_[row + u]];
        grp.heap.push_back({d, u});
        std::push_heap(grp.heap.begin(), grp.heap.end(), std::greater<>{});
    }

    for (std::size_t j = 0; j < k_; ++j) {
        if (j == i) continue;
        if (seq_[j].contains(v)) {
            --counts_.inter_at(i, j);
            --counts_.inter_at(j, i);
        } else {
            --counts_.uni_at(i, j);
            --counts_.uni_at(j, i);
        }
    }

    signature_[static_cast<std::size_t>(v) * sig_words_ + i / 64] &= ~(std::uint64_t{1} << (i % 64));
    for (std::size_t j = 0; j < k_; ++j) {
        if (j == i || !seq_[j].contains(v)) continue;
        leave_group(j, v);
        join_group(j, v);
    }

    // Row i of the pair counts changed: groups of S_i see all k-1 terms
    // change, groups of every other S_j see the (j, i) term change.
    for (std::size_t j = 0; j < k_; ++j) {
        for (GroupId id : active_[j]) {
            groups_[id].jaccard_delta = compute_jaccard_delta(j, groups_[id].signature);
        }
    }

    ++removals_;
    if (options_.audit_interval != 0 && removals_ % options_.audit_interval == 0) {
        if (auto problem = audit()) throw std::logic_error("peel state audit failed: " + *problem);
    }
}

std::vector<GroupInfo> PeelState::group_table() const {
    std::vector<GroupInfo> out;
    for (std::size_t i = 0; i < k_; ++i) {
        std::map<GroupId, GroupInfo> by_id;
        seq_[i].for_each([&](VertexId v) {
            const GroupId id = group_of_[i * n_ + v];
            auto [it, inserted] = by_id.try_emplace(id);
            if (inserted) {
                const Group& grp = groups_[id];
                it->second.snapshot = i;
                it->second.signature.resize(k_);
                for (std::size_t j = 0; j < k_; ++j) it->second.signature[j] = signature_bit(grp.signature, j) ? '1' : '0';
                it->second.jaccard_delta = grp.jaccard_delta;
            }
            it->second.members.push_back(v);
        });
        std::vector<GroupInfo> row;
        for (auto& [id, info] : by_id) row.push_back(std::move(info));
        std::sort(row.begin(), row.end(),
                  [](const GroupInfo& a, const GroupInfo& b) { return a.signature < b.signature; });
        for (auto& info : row) out.push_back(std::move(info));
    }
    return out;
}

std::optional<std::string> PeelState::audit() const {
    std::ostringstream why;
    const TemporalGraph& g = *graph_;

    for (std::size_t i = 0; i < k_; ++i) {
        const VertexSet& si = seq_[i];
        std::size_t size = 0;
        for (VertexId v = 0; v < n_; ++v) size += si.contains(v) ? 1 : 0;
        if (size != counts_.sizes[i]) {
            why << "size of S_" << i << " is " << size << ", counter says " << counts_.sizes[i];
            return why.str();
        }

        const Snapshot& gi = g.snapshot(i);
        std::size_t twice_edges = 0;
        for (VertexId v = 0; v < n_; ++v) {
            if (!si.contains(v)) continue;
            std::uint32_t d = 0;
            for (VertexId u : gi.neighbors(v)) d += si.contains(u) ? 1 : 0;
            twice_edges += d;
            if (d != degree_[i * n_ + v]) {
                why << "degree of " << v << " in S_" << i << " is " << d << ", stored " << degree_[i * n_ + v];
                return why.str();
            }
        }
        if (twice_edges / 2 != counts_.edges[i]) {
            why << "|E(S_" << i << ")| is " << twice_edges / 2 << ", counter says " << counts_.edges[i];
            return why.str();
        }

        for (std::size_t j = 0; j < k_; ++j) {
            if (j == i) continue;
            std::uint64_t in = 0, un = 0;
            for (VertexId v = 0; v < n_; ++v) {
                const bool a = si.contains(v), b = seq_[j].contains(v);
                in += (a && b) ? 1 : 0;
                un += (a || b) ? 1 : 0;
            }
            if (in != counts_.inter_at(i, j) || un != counts_.uni_at(i, j)) {
                why << "pair (" << i << "," << j << ") counts " << counts_.inter_at(i, j) << "/"
                    << counts_.uni_at(i, j) << ", expected " << in << "/" << un;
                return why.str();
            }
        }

        // Partition: members grouped by true membership pattern.
        std::map<std::vector<bool>, std::vector<VertexId>> expected;
        for (VertexId v = 0; v < n_; ++v) {
            if (!si.contains(v)) {
                if (group_of_[i * n_ + v] != kNoGroup) {
                    why << "vertex " << v << " outside S_" << i << " still assigned to a group";
                    return why.str();
                }
                continue;
            }
            std::vector<bool> pattern(k_);
            for (std::size_t j = 0; j < k_; ++j) pattern[j] = seq_[j].contains(v);
            expected[pattern].push_back(v);
        }
        if (expected.size() != active_[i].size()) {
            why << "S_" << i << " has " << expected.size() << " membership patterns but " << active_[i].size()
                << " groups";
            return why.str();
        }
        if (delta_max_ < active_[i].size()) {
            why << "delta_max " << delta_max_ << " below group count of S_" << i;
            return why.str();
        }
        for (const auto& [pattern, members] : expected) {
            const GroupId id = group_of_[i * n_ + members.front()];
            if (id == kNoGroup || !groups_[id].in_use || groups_[id].snapshot != i) {
                why << "vertex " << members.front() << " of S_" << i << " has no live group";
                return why.str();
            }
            const Group& grp = groups_[id];
            for (std::size_t j = 0; j < k_; ++j) {
                if (signature_bit(grp.signature, j) != pattern[j]) {
                    why << "group signature of vertex " << members.front() << " in S_" << i << " is stale";
                    return why.str();
                }
            }
            if (grp.live != members.size()) {
                why << "group live count " << grp.live << " but " << members.size() << " members";
                return why.str();
            }
            for (VertexId v : members) {
                if (group_of_[i * n_ + v] != id) {
                    why << "vertices " << members.front() << " and " << v << " share a pattern but not a group";
                    return why.str();
                }
                const std::uint32_t d = degree_[i * n_ + v];
                const bool queued = std::any_of(grp.heap.begin(), grp.heap.end(), [&](const HeapEntry& e) {
                    return e.vertex == v && e.degree == d;
                });
                if (!queued) {
                    why << "vertex " << v << " of S_" << i << " has no heap entry with its degree " << d;
                    return why.str();
                }
            }

            // Jaccard part of the gain from the actual sets.
            VertexSet reduced = si;
            reduced.erase(members.front());
            double fresh = 0.0;
            for (std::size_t j = 0; j < k_; ++j) {
                if (j == i) continue;
                fresh += jaccard(reduced, seq_[j]) - jaccard(si, seq_[j]);
            }
            if (std::abs(fresh - grp.jaccard_delta) > 1e-9) {
                why << "cached Jaccard delta " << grp.jaccard_delta << " of a group in S_" << i << ", fresh " << fresh;
                return why.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace jwds
