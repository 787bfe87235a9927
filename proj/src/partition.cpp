#include "chowfano/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chowfano {

Partition::Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
Partition::Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

void Partition::normalize() {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_box(int rows, int cols) const {
    return static_cast<int>(parts_.size()) <= rows && (parts_.empty() || parts_[0] <= cols);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

Partition Partition::complement(int rows, int cols) const {
    if (!fits_box(rows, cols)) throw std::invalid_argument("complement: partition exceeds box");
    std::vector<int> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = cols - part(rows - 1 - i);
    return Partition(std::move(c));
}

std::string Partition::bracket() const {
    std::string s = "s[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::string Partition::sigma(int pad) const {
    std::string s = "sigma_{";
    std::size_t n = std::max<std::size_t>(parts_.size(), static_cast<std::size_t>(pad));
    if (n == 0) s += "0";
    for (std::size_t i = 0; i < n; ++i) s += std::to_string(part(i));
    return s + "}";
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(cur);
        if (row >= rows) return;
        for (int p = 1; p <= maxpart; ++p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a < b;
    });
    return out;
}

std::vector<Partition> partitions_of_weight_in_box(int w, int rows, int cols) {
    std::vector<Partition> out;
    for (const auto& p : partitions_in_box(rows, cols))
        if (p.weight() == w) out.push_back(p);
    return out;
}

}  // namespace chowfano
