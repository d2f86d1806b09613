#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace surfhh {

inline constexpr int kDefaultNmax = 13;

// dim HH^0 .. HH^nmax over a field of the given characteristic.
struct HHTable {
  int characteristic = 0;
  std::vector<long> dims;
  std::string tail_note;

  int nmax() const { return static_cast<int>(dims.size()) - 1; }
  bool same_dims(const HHTable& o) const { return dims == o.dims; }
};

std::string format_dims(const std::vector<long>& dims);

}  // namespace surfhh
