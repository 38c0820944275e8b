#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cobord {

/// A finitely supported multi-index I = (alpha_j)_{j>=1}, stored as the
/// multiset of parts {j repeated alpha_j times} in weakly decreasing order.
/// Doubles as the exponent key of a monomial c_1^{a_1} c_2^{a_2} ... with
/// alpha_j = a_j, so weight() is the graded degree in both roles.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// From the multiplicity view: alpha[j] copies of part j.
    static Partition from_alpha(const std::map<int, int>& alpha);

    /// Single part j with multiplicity m (alpha_j = m).
    static Partition single(int j, int m = 1);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }

    int multiplicity(int j) const;
    std::map<int, int> alpha() const;
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Union of the part multisets (product of the monomials b^I b^J = b^{I+J}).
    Partition merged(const Partition& other) const;

    /// Canonical key: parts ascending joined by '+', e.g. "1+1+2"; "0" if empty.
    std::string to_string() const;
    static Partition parse(const std::string& text);

    bool operator==(const Partition&) const = default;

    /// Graded order: by weight, then reverse-lexicographic on the parts
    /// ([4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1] within weight 4).
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;  // weakly decreasing, all >= 1
    int weight_ = 0;
};

/// All partitions of weight d in the order induced by operator<=>.
/// The list length is the partition number p(d).
std::vector<Partition> partitions_of(int d);

/// p(d), by enumeration (cached).
std::size_t partition_count(int d);

}  // namespace cobord
