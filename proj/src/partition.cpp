#include "spp/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spp {

int semi_pointed_partition::pointed_count() const {
    int c = 0;
    for (const auto& b : parts)
        if (b.pointed_at != 0) ++c;
    return c;
}

int semi_pointed_partition::part_of(int label) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (std::binary_search(parts[i].elements.begin(), parts[i].elements.end(), label))
            return static_cast<int>(i);
    return -1;
}

void semi_pointed_partition::canonicalize() {
    for (auto& b : parts) std::sort(b.elements.begin(), b.elements.end());
    std::sort(parts.begin(), parts.end(), [](const part& a, const part& b) {
        return a.elements.front() < b.elements.front();
    });
}

std::string semi_pointed_partition::to_string() const {
    std::ostringstream os;
    for (const auto& b : parts) {
        os << "{";
        for (std::size_t i = 0; i < b.elements.size(); ++i) {
            if (i) os << ",";
            os << b.elements[i];
            if (b.elements[i] == b.pointed_at) os << "*";
        }
        os << "}";
    }
    return os.str();
}

bool is_valid(const semi_pointed_partition& sp, const ground_set& gs) {
    std::vector<char> seen(static_cast<std::size_t>(gs.size()) + 1, 0);
    for (const auto& b : sp.parts) {
        if (b.elements.empty()) return false;
        if (!std::is_sorted(b.elements.begin(), b.elements.end())) return false;
        bool has_pointable = false, has_nonpointable = false;
        for (int e : b.elements) {
            if (e < 1 || e > gs.size() || seen[static_cast<std::size_t>(e)]) return false;
            seen[static_cast<std::size_t>(e)] = 1;
            (e <= gs.pointable ? has_pointable : has_nonpointable) = true;
        }
        if (b.pointed_at != 0) {
            if (b.pointed_at > gs.pointable) return false;
            if (!std::binary_search(b.elements.begin(), b.elements.end(), b.pointed_at)) return false;
        }
        if (!has_nonpointable && b.pointed_at == 0) return false; // all-pointable must be pointed
        if (!has_pointable && b.pointed_at != 0) return false;    // all-non-pointable must be unpointed
    }
    for (int e = 1; e <= gs.size(); ++e)
        if (!seen[static_cast<std::size_t>(e)]) return false;
    return true;
}

namespace {

void enumerate_pointings(const std::vector<std::vector<int>>& blocks, const ground_set& gs,
                         std::size_t i, semi_pointed_partition& acc,
                         std::vector<semi_pointed_partition>& out) {
    if (i == blocks.size()) {
        semi_pointed_partition sp = acc;
        sp.canonicalize();
        out.push_back(std::move(sp));
        return;
    }
    const auto& blk = blocks[i];
    const bool has_nonpointable = blk.back() > gs.pointable;
    if (has_nonpointable) {
        acc.parts.push_back({blk, 0});
        enumerate_pointings(blocks, gs, i + 1, acc, out);
        acc.parts.pop_back();
    }
    for (int e : blk) {
        if (e > gs.pointable) break;
        acc.parts.push_back({blk, e});
        enumerate_pointings(blocks, gs, i + 1, acc, out);
        acc.parts.pop_back();
    }
}

void enumerate_blocks(int next, int n, std::vector<std::vector<int>>& blocks, const ground_set& gs,
                      std::vector<semi_pointed_partition>& out) {
    if (next > n) {
        semi_pointed_partition acc;
        enumerate_pointings(blocks, gs, 0, acc, out);
        return;
    }
    // Index rather than iterate: the recursion grows and shrinks `blocks`,
    // which may reallocate and would invalidate references into it.
    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
        blocks[i].push_back(next);
        enumerate_blocks(next + 1, n, blocks, gs, out);
        blocks[i].pop_back();
    }
    blocks.push_back({next});
    enumerate_blocks(next + 1, n, blocks, gs, out);
    blocks.pop_back();
}

} // namespace

std::vector<semi_pointed_partition> enumerate_spp(const ground_set& gs) {
    std::vector<semi_pointed_partition> out;
    if (gs.pointable < 0 || gs.nonpointable < 0) throw std::invalid_argument("enumerate_spp: negative ground set");
    if (gs.size() == 0) return out; // no semi-pointed partition of the empty set
    std::vector<std::vector<int>> blocks;
    enumerate_blocks(1, gs.size(), blocks, gs, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool leq(const semi_pointed_partition& p, const semi_pointed_partition& q) {
    // Locate each label's part in both partitions.
    int n = 0;
    for (const auto& b : p.parts) n += static_cast<int>(b.elements.size());
    std::vector<int> in_p(static_cast<std::size_t>(n) + 1, -1), in_q(in_p);
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        for (int e : p.parts[i].elements) in_p[static_cast<std::size_t>(e)] = static_cast<int>(i);
    for (std::size_t i = 0; i < q.parts.size(); ++i)
        for (int e : q.parts[i].elements) in_q[static_cast<std::size_t>(e)] = static_cast<int>(i);

    // Every part of q must sit inside a single part of p.
    for (const auto& b : q.parts)
        for (int e : b.elements)
            if (in_p[static_cast<std::size_t>(e)] != in_p[static_cast<std::size_t>(b.elements.front())])
                return false;

    // Pointing inheritance.
    for (const auto& b : p.parts) {
        if (b.pointed_at != 0) {
            if (q.parts[static_cast<std::size_t>(in_q[static_cast<std::size_t>(b.pointed_at)])].pointed_at !=
                b.pointed_at)
                return false;
        } else {
            bool found_unpointed = false;
            for (int e : b.elements) {
                const auto& qb = q.parts[static_cast<std::size_t>(in_q[static_cast<std::size_t>(e)])];
                if (qb.pointed_at == 0) {
                    found_unpointed = true;
                    break;
                }
            }
            if (!found_unpointed) return false;
        }
    }
    return true;
}

semi_pointed_partition one_block(const ground_set& gs, int pointed_at) {
    if (gs.size() == 0) throw std::invalid_argument("one_block: empty ground set");
    part b;
    for (int e = 1; e <= gs.size(); ++e) b.elements.push_back(e);
    b.pointed_at = pointed_at;
    semi_pointed_partition sp{{b}};
    if (!is_valid(sp, gs)) throw std::invalid_argument("one_block: invalid pointing for this ground set");
    return sp;
}

semi_pointed_partition all_singletons(const ground_set& gs) {
    semi_pointed_partition sp;
    for (int e = 1; e <= gs.size(); ++e) sp.parts.push_back({{e}, e <= gs.pointable ? e : 0});
    return sp;
}

semi_pointed_partition relabel(const semi_pointed_partition& sp, const std::vector<int>& image) {
    semi_pointed_partition r;
    for (const auto& b : sp.parts) {
        part nb;
        for (int e : b.elements) nb.elements.push_back(image.at(static_cast<std::size_t>(e)));
        nb.pointed_at = b.pointed_at == 0 ? 0 : image.at(static_cast<std::size_t>(b.pointed_at));
        r.parts.push_back(std::move(nb));
    }
    r.canonicalize();
    return r;
}

nlohmann::json to_json(const semi_pointed_partition& sp) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : sp.parts)
        blocks.push_back({{"elements", b.elements}, {"pointed", b.pointed_at}});
    return {{"blocks", blocks}};
}

} // namespace spp
