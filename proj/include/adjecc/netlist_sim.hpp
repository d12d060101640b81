#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/hdl.hpp"

namespace adjecc {

/// Interpreter for the assignment-only Verilog subset that emit_encoder and
/// emit_decoder produce.
///
/// Accepted: one module with `input wire`/`output wire` ports, `wire`
/// declarations and `assign lhs = expr;`. An expr is a 1-bit constant or
/// operands joined by one operator kind, each optionally negated with ~.
/// Assignments must appear in dependency order. Anything else is a
/// parse_error.
///
/// Simulation is bit-sliced: every signal bit carries a 64-bit word, one
/// bit per lane, so 64 independent input vectors evaluate per pass.
class Netlist {
public:
  static Netlist parse(std::string_view text);

  const std::string& module_name() const noexcept { return module_name_; }
  const std::vector<HdlPort>& ports() const noexcept { return ports_; }

  /// Count of operators of each kind across all assignments.
  std::size_t operator_count(char op) const;
  std::size_t assignment_count() const noexcept { return assigns_.size(); }

  /// Lane words per port bit: lanes[b] holds bit b+1 of the port for all
  /// 64 lanes.
  using Lanes = std::vector<std::uint64_t>;

  std::map<std::string, Lanes> simulate(const std::map<std::string, Lanes>& inputs) const;

  /// Single-vector convenience wrapper over simulate (lane 0).
  std::map<std::string, BitVec> evaluate(const std::map<std::string, BitVec>& inputs) const;

private:
  struct Operand {
    std::size_t slot;
    bool negate;
  };
  struct Assign {
    std::size_t target;
    char op;  // '^', '&', '|', or '0'/'1' for constants
    std::vector<Operand> operands;
  };
  struct Signal {
    std::size_t base;
    std::size_t lo;
    std::size_t width;
  };

  std::string module_name_;
  std::vector<HdlPort> ports_;
  std::map<std::string, Signal> signals_;
  std::vector<Assign> assigns_;
  std::size_t slot_count_ = 0;
};

/// Packs up to 64 vectors of equal width into lane words.
Netlist::Lanes pack_lanes(const std::vector<BitVec>& vectors);

/// Extracts lane `lane` as a BitVec of lanes.size() bits.
BitVec unpack_lane(const Netlist::Lanes& lanes, std::size_t lane);

} // namespace adjecc
