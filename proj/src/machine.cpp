#include "nwlab/machine.hpp"

#include <ostream>
#include <stdexcept>

#include "nwlab/exact.hpp"

namespace nwlab {

std::size_t num_states_for_length(std::size_t bits) { return 1 + bits / 256; }

namespace {

std::size_t state_bits_for(std::size_t num_states) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < num_states) ++b;
  return b;
}

}  // namespace

Machine decode(const BitString& description) {
  Machine machine;
  machine.num_states = num_states_for_length(description.size());
  const std::size_t sb = state_bits_for(machine.num_states);
  const std::size_t entry_bits = 12 + sb;
  const std::size_t len = description.size();

  auto bit_at = [&](std::size_t pos) -> int {
    return len == 0 ? 0 : description.bit(pos % len);
  };

  machine.entries.resize(machine.num_states * 18);
  for (std::size_t q = 0; q < machine.num_states; ++q) {
    for (std::size_t v = 0; v < 18; ++v) {
      const std::size_t base = (q * 18 + v) * entry_bits;
      TransitionEntry e;
      e.keep_running = bit_at(base + 0);
      e.out_en = bit_at(base + 1);
      e.out_src_input = bit_at(base + 2);
      e.out_bit = bit_at(base + 3);
      e.wr_en = bit_at(base + 4);
      e.wr_bit = bit_at(base + 5);
      e.in_mv = static_cast<std::uint8_t>((bit_at(base + 6) * 2 + bit_at(base + 7)) % 3);
      e.wk_mv = static_cast<std::uint8_t>((bit_at(base + 8) * 2 + bit_at(base + 9)) % 3);
      e.rnd_mv = static_cast<std::uint8_t>((bit_at(base + 10) * 2 + bit_at(base + 11)) % 3);
      std::uint32_t ns = 0;
      for (std::size_t i = 0; i < sb; ++i)
        ns = (ns << 1) | static_cast<std::uint32_t>(bit_at(base + 12 + i));
      e.next_state = ns % static_cast<std::uint32_t>(machine.num_states);
      machine.entries[q * 18 + v] = e;
    }
  }
  return machine;
}

std::string machine_table_key(const Machine& machine) {
  std::string key;
  key.reserve(machine.entries.size() * 10 + 8);
  key += std::to_string(machine.num_states);
  key += ':';
  for (const auto& e : machine.entries) {
    key += static_cast<char>('0' + e.keep_running);
    key += static_cast<char>('0' + e.out_en);
    key += static_cast<char>('0' + e.out_src_input);
    key += static_cast<char>('0' + e.out_bit);
    key += static_cast<char>('0' + e.wr_en);
    key += static_cast<char>('0' + e.wr_bit);
    key += static_cast<char>('0' + e.in_mv);
    key += static_cast<char>('0' + e.wk_mv);
    key += static_cast<char>('0' + e.rnd_mv);
    key += std::to_string(e.next_state);
    key += ',';
  }
  return key;
}

namespace {

struct NoObserver {
  void operator()(std::uint64_t, std::size_t, std::size_t, std::size_t, std::size_t, int,
                  int, int, const std::vector<std::uint8_t>&) const {}
};

// Shared stepper; `random_bit_at` abstracts the two tape models.
template <typename RandomBitAt, typename Observer = NoObserver>
RunOutcome run_impl(const Machine& machine, const BitString& input,
                    RandomBitAt&& random_bit_at, const TruncationBudget& budget,
                    std::size_t max_output, Observer&& observe = Observer{}) {
  RunOutcome outcome;
  std::size_t state = 0;
  std::size_t ip = 0, wp = 0, rp = 0;
  // work alphabet: 0, 1, 2 = blank
  std::vector<std::uint8_t> work(budget.max_work_cells, 2);
  if (budget.max_work_cells == 0) {
    outcome.status = RunStatus::truncated_space;
    return outcome;
  }

  for (;;) {
    if (outcome.steps >= budget.max_steps) {
      outcome.status = RunStatus::truncated_steps;
      outcome.output.clear();
      return outcome;
    }
    const int input_sym = ip < input.size() ? input.bit(ip) : 2;
    const int work_sym = work[wp];
    const int rnd = random_bit_at(rp);
    observe(outcome.steps, state, ip, wp, rp, input_sym, work_sym, rnd, work);
    const TransitionEntry& e = machine.at(state, input_sym, work_sym, rnd);

    if (e.out_en) {
      if (outcome.output.size() >= max_output) {
        outcome.status = RunStatus::halted;
        outcome.output_capped = true;
        return outcome;
      }
      outcome.output.push_back(e.out_src_input ? (input_sym == 1 ? 1 : 0) : e.out_bit);
    }
    if (e.wr_en) work[wp] = e.wr_bit;

    // input head clamps to [0, |input|]; position |input| reads the end marker
    if (e.in_mv == 0) {
      if (ip < input.size()) ++ip;
    } else if (e.in_mv == 1) {
      if (ip > 0) --ip;
    }
    if (e.wk_mv == 1) {
      if (wp + 1 >= budget.max_work_cells) {
        outcome.status = RunStatus::truncated_space;
        outcome.output.clear();
        ++outcome.steps;
        return outcome;
      }
      ++wp;
    } else if (e.wk_mv == 2) {
      if (wp > 0) --wp;
    }
    if (e.rnd_mv == 1)
      ++rp;
    else if (e.rnd_mv == 2 && rp > 0)
      --rp;

    ++outcome.steps;
    if (!e.keep_running) {
      outcome.status = RunStatus::halted;
      return outcome;
    }
    state = e.next_state;
  }
}

}  // namespace

RunOutcome run_with_tape(const Machine& machine, const BitString& input,
                         const BitString& random_tape, const TruncationBudget& budget,
                         std::size_t max_output) {
  const std::size_t len = random_tape.size();
  return run_impl(
      machine, input,
      [&](std::size_t rp) -> int { return len == 0 ? 0 : random_tape.bit(rp % len); },
      budget, max_output);
}

RunOutcome run_truncated(const Machine& machine, const BitString& input,
                         RandomStream& random, const TruncationBudget& budget,
                         std::size_t max_output) {
  std::vector<std::uint8_t> materialized;
  return run_impl(
      machine, input,
      [&](std::size_t rp) -> int {
        while (materialized.size() <= rp)
          materialized.push_back(static_cast<std::uint8_t>(random.next_bit()));
        return materialized[rp];
      },
      budget, max_output);
}

RunOutcome run_with_tape_traced(const Machine& machine, const BitString& input,
                                const BitString& random_tape,
                                const TruncationBudget& budget, std::size_t max_output,
                                std::ostream& trace) {
  const std::size_t len = random_tape.size();
  return run_impl(
      machine, input,
      [&](std::size_t rp) -> int { return len == 0 ? 0 : random_tape.bit(rp % len); },
      budget, max_output,
      [&trace](std::uint64_t step, std::size_t state, std::size_t ip, std::size_t wp,
               std::size_t rp, int in_sym, int wk_sym, int rnd,
               const std::vector<std::uint8_t>& work) {
        trace << "step=" << step << " state=" << state << " in@" << ip << '='
              << "01$"[in_sym] << " wk@" << wp << '=' << "01_"[wk_sym] << " rnd@" << rp
              << '=' << rnd << " work=";
        for (std::uint8_t c : work) trace << "01_"[c];
        trace << '\n';
      });
}

std::vector<MachineDescription> enumerate_machines(std::size_t max_bits) {
  if (max_bits > 16)
    throw GuardRefusal("enumerate_machines: max_bits <= 16 (got " +
                       std::to_string(max_bits) + ")");
  std::vector<MachineDescription> out;
  out.reserve((std::size_t{2} << max_bits) - 1);
  for (std::size_t len = 0; len <= max_bits; ++len) {
    const std::uint64_t count = 1ULL << len;
    for (std::uint64_t v = 0; v < count; ++v) {
      MachineDescription desc;
      desc.bits = BitString::from_value(v, len);
      desc.num_states = num_states_for_length(len);
      out.push_back(std::move(desc));
    }
  }
  return out;
}

}  // namespace nwlab
