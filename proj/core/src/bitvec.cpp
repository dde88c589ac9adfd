#include "grainforge/bitvec.hpp"

#include <stdexcept>

namespace grainforge {

void BitVec::shift_down_push_top(int top) {
    if (n_ == 0) return;
    std::size_t nw = w_.size();
    for (std::size_t i = 0; i + 1 < nw; ++i) w_[i] = (w_[i] >> 1) | (w_[i + 1] << 63);
    w_[nw - 1] >>= 1;
    set(n_ - 1, top);
}

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) s.push_back(char('0' + get(i)));
    return s;
}

BitVec BitVec::from_string(const std::string& s) {
    BitVec b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVec: bad bit char");
        b.set(i, s[i] - '0');
    }
    return b;
}

}  // namespace grainforge
