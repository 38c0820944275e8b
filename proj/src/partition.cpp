#include "cobord/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cobord {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_alpha(const std::map<int, int>& alpha) {
    std::vector<int> parts;
    for (auto [j, m] : alpha) {
        if (m < 0) throw std::invalid_argument("Partition: negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(m), j);
    }
    return Partition(std::move(parts));
}

Partition Partition::single(int j, int m) {
    return from_alpha({{j, m}});
}

int Partition::multiplicity(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

std::map<int, int> Partition::alpha() const {
    std::map<int, int> a;
    for (int p : parts_) ++a[p];
    return a;
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!s.empty()) s += '+';
        s += std::to_string(*it);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    if (text == "0") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
        std::size_t used = 0;
        int part = std::stoi(tok, &used);
        if (used != tok.size() || part < 1)
            throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(part);
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (weight_ != other.weight_) return weight_ <=> other.weight_;
    // Reverse-lexicographic on weakly decreasing part lists.
    std::size_t n = std::min(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (parts_[i] != other.parts_[i]) return other.parts_[i] <=> parts_[i];
    return parts_.size() <=> other.parts_.size();
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& acc,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate(d, d, acc, out);
    return out;
}

std::size_t partition_count(int d) {
    static std::map<int, std::size_t> cache;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, partitions_of(d).size()).first;
    return it->second;
}

}  // namespace cobord
