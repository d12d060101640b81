#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/code_spec.hpp"

namespace adjecc {

/// One XOR node: `name = terms[0] ^ terms[1] ^ ...`. A single term is a
/// wire alias, no terms a constant 0.
struct XorNode {
  std::string name;
  std::vector<std::string> terms;

  friend bool operator==(const XorNode&, const XorNode&) = default;
};

/// Straight-line XOR program.
///
/// Nodes are listed in evaluation order and may reference inputs and
/// earlier nodes only. `outputs` names the nodes that are results, in
/// result order; every other node is a shared temporary.
struct XorProgram {
  std::vector<std::string> inputs;
  std::vector<XorNode> nodes;
  std::vector<std::string> outputs;

  friend bool operator==(const XorProgram&, const XorProgram&) = default;
};

enum class ProgramSide { Encoder, Syndrome };

/// Encoder: inputs i1..ik, outputs p1..pr, each flattened to info terms.
/// Syndrome: inputs c1..cn, outputs s1..sr, one per H row.
XorProgram extract_program(const CodeSpec& spec, ProgramSide side);

/// Throws argument_error on duplicate names, forward or unknown references,
/// or outputs that are not nodes.
void validate(const XorProgram& program);

/// Each output expanded to a sorted list of input indices, duplicates
/// cancelled mod 2. Two programs are equivalent iff these agree.
std::vector<std::vector<std::size_t>> flatten(const XorProgram& program);

enum class CsePolicy {
  /// Repeatedly factor out the operand pair shared by the most nodes.
  GreedyPair,
  /// The built-in (23,16) encoder's hand-factored form.
  HandShared,
};

class unsupported_policy : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Common-subexpression elimination. The result is equivalent to `program`
/// under flatten() and never costs more XOR2 gates.
///
/// GreedyPair picks, each round, the unordered operand pair that occurs in
/// the most nodes (ties: smallest pair by declaration order, inputs first,
/// then nodes in creation order) and replaces it by a new temporary tN
/// placed just before its first user. It stops when no pair occurs twice.
///
/// HandShared only applies to the built-in encoder program and throws
/// unsupported_policy for anything else.
XorProgram optimize_cse(const XorProgram& program, CsePolicy policy);

struct OutputCost {
  std::string name;
  std::size_t fanin = 0;
  std::size_t flattened_terms = 0;
  std::size_t depth = 0;
};

/// 2-input XOR gate model. Each node of fan-in f costs f-1 gates and adds
/// ceil(log2 f) levels on top of its deepest operand.
struct CostReport {
  std::size_t xor2_count = 0;
  std::size_t depth = 0;
  std::vector<OutputCost> outputs;
};

CostReport cost(const XorProgram& program);

/// Dump format: one line per node, `name = a ^ b ^ c` (`name = 0` if empty).
std::string render_program(const XorProgram& program);

/// Bit-parallel evaluator for equivalence tests.
class XorEvaluator {
public:
  explicit XorEvaluator(const XorProgram& program);

  /// `inputs` has one bit per program input; result has one per output.
  BitVec operator()(const BitVec& inputs) const;

private:
  std::size_t input_count_;
  std::vector<std::vector<std::size_t>> operands_;
  std::vector<std::size_t> output_slots_;
};

} // namespace adjecc
