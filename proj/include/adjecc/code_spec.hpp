#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjecc/bitvec.hpp"
#include "adjecc/check_matrix.hpp"

namespace adjecc {

enum class Capability { Sec, SecDaec, SecDaecTaec };

/// "SEC", "DAEC" or "TAEC", as used in code files.
std::string_view to_token(Capability capability);

/// Accepts the file tokens and their lowercase forms plus SEC_DAEC / SEC_DAEC_TAEC.
Capability capability_from_token(std::string_view token);

/// Widest adjacent burst the capability corrects: 1, 2 or 3.
std::size_t max_burst(Capability capability);

/// A burst of `width` consecutive flipped bits starting at 1-based `start`.
struct ErrorPattern {
  std::size_t start = 1;
  std::size_t width = 1;

  friend auto operator<=>(const ErrorPattern&, const ErrorPattern&) = default;
};

/// Correctable bursts of an n-bit word in (width, start) order.
std::vector<ErrorPattern> correctable_patterns(std::size_t n, Capability capability);

BitVec pattern_vector(std::size_t n, ErrorPattern pattern);

struct BitRole {
  enum class Kind { Info, Parity };
  Kind kind = Kind::Info;
  std::size_t index = 1;

  friend bool operator==(const BitRole&, const BitRole&) = default;
};

/// "I3" / "P7".
std::string to_token(BitRole role);
BitRole role_from_token(std::string_view token);

/// An H-matrix bound to a codeword layout and a claimed capability.
///
/// Construction rejects layouts that are not a bijection onto I1..Ik, P1..Pr
/// or whose parity columns are singular. Every basis message is then checked
/// to land in the null space of H. The capability is only a label here; the
/// constraint checker decides whether the matrix earns it.
class CodeSpec {
public:
  CodeSpec(std::string name, CheckMatrix h, std::vector<BitRole> layout, Capability capability);

  const std::string& name() const noexcept { return name_; }
  const CheckMatrix& matrix() const noexcept { return h_; }
  const std::vector<BitRole>& layout() const noexcept { return layout_; }
  Capability capability() const noexcept { return capability_; }

  std::size_t n() const noexcept { return h_.cols(); }
  std::size_t r() const noexcept { return h_.rows(); }
  std::size_t k() const noexcept { return n() - r(); }

  /// Codeword position (1-based) of info bit j / parity bit j.
  std::size_t info_position(std::size_t j) const { return info_positions_.at(j - 1); }
  std::size_t parity_position(std::size_t j) const { return parity_positions_.at(j - 1); }

  /// Row j is a k-bit mask: parity bit j = dot(row j, message).
  std::span<const BitVec> parity_generator() const noexcept { return generator_; }

  friend bool operator==(const CodeSpec& a, const CodeSpec& b) {
    return a.name_ == b.name_ && a.h_ == b.h_ && a.layout_ == b.layout_ &&
           a.capability_ == b.capability_;
  }

private:
  std::string name_;
  CheckMatrix h_;
  std::vector<BitRole> layout_;
  Capability capability_;
  std::vector<std::size_t> info_positions_;
  std::vector<std::size_t> parity_positions_;
  std::vector<BitVec> generator_;
};

/// Places info and parity bits at their layout positions.
BitVec assemble(const CodeSpec& spec, const BitVec& info, const BitVec& parity);

struct SplitWord {
  BitVec info;
  BitVec parity;
};

SplitWord disassemble(const CodeSpec& spec, const BitVec& codeword);

/// Parity bits solved from H: the unique p with H * assemble(m, p) = 0.
BitVec solve_parity(const CodeSpec& spec, const BitVec& message);

/// The (23,16) SEC-DAEC-TAEC code with its interleaved layout
/// P1 I1 P2 I2..I6 P3 I7..I10 P4 I11..I13 P5 P6 P7 I14..I16.
CodeSpec builtin_2316();

/// True when spec has the built-in matrix and layout (name is ignored).
bool is_builtin_2316(const CodeSpec& spec);

/// One line of the built-in code's hand-factored parity equations:
/// p[parity] = XOR of i[info_terms] (^ p[parity_term] if present).
struct SharedParityEquation {
  std::size_t parity;
  std::vector<std::size_t> info_terms;
  std::optional<std::size_t> parity_term;
};

/// Equations in evaluation order p3, p6, p4, p7, p1, p2, p5; p1, p2 and p5
/// reuse p3, p6 and p4 respectively.
std::span<const SharedParityEquation> builtin_2316_shared_equations();

/// Contents of a code file: a matrix, optionally with layout and capability.
struct CodeFile {
  CheckMatrix matrix;
  std::optional<std::vector<BitRole>> layout;
  std::optional<Capability> capability;
};

/// Matrix text format followed by optional "layout: P1 I1 ..." and
/// "capability: SEC|DAEC|TAEC" lines.
CodeFile parse_code_file(std::string_view text);

/// Requires both trailer lines.
CodeSpec parse_code_spec(std::string_view text, std::string name);

std::string render_code_spec(const CodeSpec& spec);

} // namespace adjecc
