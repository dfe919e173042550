#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace spp {

// Ground set {1, ..., pointable + nonpointable}: labels 1..pointable may carry
// a point, the remaining labels may not.
struct ground_set {
    int pointable = 0;
    int nonpointable = 0;
    int size() const { return pointable + nonpointable; }
    bool operator==(const ground_set&) const = default;
};

// One part of a semi-pointed partition.  Elements are kept sorted ascending;
// pointed_at == 0 means the part is unpointed, otherwise pointed_at is the
// label of the pointed element (which must belong to the part and be a
// pointable label).
struct part {
    std::vector<int> elements;
    int pointed_at = 0;
    auto operator<=>(const part&) const = default;
};

// A partition of the ground set into parts, each pointed or not, subject to:
// a part consisting only of pointable labels must be pointed, a part with no
// pointable label must be unpointed, and mixed parts may be either.
struct semi_pointed_partition {
    std::vector<part> parts; // sorted by smallest element

    int part_count() const { return static_cast<int>(parts.size()); }
    int pointed_count() const;
    // Index of the part containing the given label, or -1.
    int part_of(int label) const;
    void canonicalize();
    auto operator<=>(const semi_pointed_partition&) const = default;

    // Canonical text form, e.g. "{1*,2}{3}" with "*" marking the point.
    std::string to_string() const;
};

bool is_valid(const semi_pointed_partition& sp, const ground_set& gs);

// All semi-pointed partitions of the ground set, sorted canonically.
std::vector<semi_pointed_partition> enumerate_spp(const ground_set& gs);

// Partial order, coarser is smaller: p <= q iff every part of q is contained
// in a part of p, every pointed part of p is pointed at the point of one of
// the q-parts it contains, and every unpointed part of p contains at least
// one unpointed q-part.
bool leq(const semi_pointed_partition& p, const semi_pointed_partition& q);

// The one-block partition, pointed at the given label (0 for unpointed).
semi_pointed_partition one_block(const ground_set& gs, int pointed_at);
semi_pointed_partition all_singletons(const ground_set& gs);

// Apply a relabelling to elements and points; image[e] is the new label of e
// (image has size gs.size() + 1, index 0 unused).
semi_pointed_partition relabel(const semi_pointed_partition& sp, const std::vector<int>& image);

nlohmann::json to_json(const semi_pointed_partition& sp);

} // namespace spp
