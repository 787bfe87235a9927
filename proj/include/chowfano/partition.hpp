#pragma once

#include <compare>
#include <string>
#include <vector>

namespace chowfano {

// Weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;
    bool empty() const { return parts_.empty(); }

    bool fits_box(int rows, int cols) const;
    bool contains(const Partition& mu) const;
    Partition conjugate() const;

    // reversed complement in a rows x cols box; requires fits_box
    Partition complement(int rows, int cols) const;

    // "s[3,2,1]"; empty partition prints "s[]"
    std::string bracket() const;
    // "sigma_{321}" padded to `pad` indices (paper-style three-index labels)
    std::string sigma(int pad = 0) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    void normalize();
    std::vector<int> parts_;
};

// all partitions contained in a rows x cols box (by increasing weight, then lex)
std::vector<Partition> partitions_in_box(int rows, int cols);
// all partitions of weight w inside a rows x cols box
std::vector<Partition> partitions_of_weight_in_box(int w, int rows, int cols);

}  // namespace chowfano
