#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace digitop::detail {

/// Square symmetric 0/1 matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    data_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
  }
  const std::uint64_t* row(std::size_t i) const noexcept { return data_.data() + i * words_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

struct Labeling {
  std::string form;
  std::vector<std::size_t> order;
};

Labeling canonical_labeling(const BitMatrix& m);

}  // namespace digitop::detail
