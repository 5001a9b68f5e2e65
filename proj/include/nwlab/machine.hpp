#pragma once

// A minimal probabilistic machine model for enumeration: two-way read-only
// input head, two-way read-only random head, one bounded work tape over
// {0,1,blank}, one-way write-only output. Every bit string decodes to some
// machine (total decoding), so counting descriptions is counting machines.
//
// Encoding. A description of length L has Q = 1 + L/256 states. Each
// (state, input symbol, work symbol, random bit) view owns one entry of
// E = 12 + ceil(log2 Q) bits, read from the description cyclically starting
// at bit (state*18 + view)*E; the empty description reads as all zeros.
// Entry fields, in order:
//   [0]     keep_running (0 halts after the step's actions)
//   [1]     out_en   (write one output bit this step)
//   [2]     out_src  (1: copy the input symbol, end counts as 0; 0: out_bit)
//   [3]     out_bit
//   [4]     wr_en    (write wr_bit at the work head)
//   [5]     wr_bit
//   [6:8)   input move, value mod 3: 0 right, 1 left, 2 stay
//   [8:10)  work move, value mod 3: 0 stay, 1 right, 2 left
//   [10:12) random move, value mod 3: 0 stay, 1 right, 2 left
//   [12:..) next state, value mod Q
// The input head advances by default so the all-ones description is the
// machine that copies its input to the output; the all-zeros description
// halts immediately.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nwlab/bitstring.hpp"
#include "nwlab/random_stream.hpp"

namespace nwlab {

struct MachineDescription {
  BitString bits;
  std::size_t num_states = 1;
};

struct TransitionEntry {
  bool keep_running = false;
  bool out_en = false;
  bool out_src_input = false;
  bool out_bit = false;
  bool wr_en = false;
  bool wr_bit = false;
  std::uint8_t in_mv = 0;
  std::uint8_t wk_mv = 0;
  std::uint8_t rnd_mv = 0;
  std::uint32_t next_state = 0;
};

struct Machine {
  std::size_t num_states = 1;
  std::vector<TransitionEntry> entries;  // num_states * 18, view-major

  // view = input_sym*6 + work_sym*2 + random_bit; symbols 0,1, and 2 for the
  // input end marker / blank work cell.
  const TransitionEntry& at(std::size_t state, int input_sym, int work_sym,
                            int random_bit) const {
    return entries[state * 18 + static_cast<std::size_t>(input_sym) * 6 +
                   static_cast<std::size_t>(work_sym) * 2 +
                   static_cast<std::size_t>(random_bit)];
  }
};

std::size_t num_states_for_length(std::size_t bits);

// Total: never fails.
Machine decode(const BitString& description);

// Canonical string of the decoded table; equal keys = behaviorally identical
// machines (used to dedupe enumerations).
std::string machine_table_key(const Machine& machine);

struct TruncationBudget {
  std::uint64_t max_steps = 0;
  std::size_t max_work_cells = 0;  // work cells the head may visit
};

enum class RunStatus { halted, truncated_steps, truncated_space };

struct RunOutcome {
  RunStatus status = RunStatus::halted;
  BitString output;  // empty whenever truncated
  std::uint64_t steps = 0;
  bool output_capped = false;  // halted because the output limit was reached
};

// Deterministic run against an explicit random tape, read cyclically (an
// empty tape reads as zeros). This is the model the exact enumerations and
// the sampling verifier share.
RunOutcome run_with_tape(const Machine& machine, const BitString& input,
                         const BitString& random_tape, const TruncationBudget& budget,
                         std::size_t max_output);

// Generic run: random bits are materialized from the stream on first visit
// (a machine cannot read more bits than it runs steps).
RunOutcome run_truncated(const Machine& machine, const BitString& input,
                         RandomStream& random, const TruncationBudget& budget,
                         std::size_t max_output);

// Debugging aid: one line per step (step, state, heads, symbols, work tape)
// into `trace`. Not a stability contract.
RunOutcome run_with_tape_traced(const Machine& machine, const BitString& input,
                                const BitString& random_tape,
                                const TruncationBudget& budget, std::size_t max_output,
                                std::ostream& trace);

// All descriptions of length 0..max_bits in length-then-lex order;
// 2^(max_bits+1) - 1 of them. Guard: max_bits <= 16.
std::vector<MachineDescription> enumerate_machines(std::size_t max_bits);

}  // namespace nwlab
