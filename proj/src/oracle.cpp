#include "nwlab/oracle.hpp"

#include <stdexcept>

#include "nwlab/random_stream.hpp"

namespace nwlab {

HardFunctionOracle table_oracle(BitString table) {
  HardFunctionOracle o;
  o.description = "table:" + table.to_string();
  o.evaluate = [table = std::move(table)](const BitString& x) {
    if (x.size() != table.size())
      throw std::invalid_argument("table_oracle: |x| must equal the table length");
    return table;
  };
  return o;
}

HardFunctionOracle seeded_oracle(std::uint64_t key) {
  HardFunctionOracle o;
  o.description = "seeded:" + std::to_string(key);
  o.evaluate = [key](const BitString& x) {
    RandomStream stream = RandomStream(key).split(x.to_string());
    return stream.next_bits(x.size());
  };
  return o;
}

HardFunctionOracle balanced_oracle(std::uint64_t key) {
  HardFunctionOracle o;
  o.description = "balanced:" + std::to_string(key);
  o.evaluate = [key](const BitString& x) {
    if (x.size() % 2 != 0)
      throw std::invalid_argument("balanced_oracle: |x| must be even");
    BitString z(x.size());
    for (std::size_t i = 0; i < x.size() / 2; ++i) z.set_bit(i, 1);
    RandomStream stream = RandomStream(key).split(x.to_string());
    // Fisher-Yates over the half-and-half table
    for (std::size_t i = x.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(stream.next_below(i));
      const int tmp = z.bit(i - 1);
      z.set_bit(i - 1, z.bit(j));
      z.set_bit(j, tmp);
    }
    return z;
  };
  return o;
}

HardFunctionOracle constant_oracle(int bit) {
  HardFunctionOracle o;
  o.description = bit ? "const1" : "const0";
  o.evaluate = [bit](const BitString& x) {
    BitString z(x.size());
    for (std::size_t i = 0; i < z.size(); ++i) z.set_bit(i, bit);
    return z;
  };
  return o;
}

}  // namespace nwlab
