#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "eea/lgp.hpp"

namespace eea {

/// "Pop[0] = Mutate(Pop[5]);" / "Pop[7] = Select(Pop[3], Pop[6]);"
std::string format_instruction(const Instruction& ins);

/// Whitespace-tolerant inverse of format_instruction. line_no is reported
/// in ParseError messages.
Instruction parse_instruction(std::string_view line, std::size_t line_no = 0);

/// C-like listing: initialization call, generation loop, one line per
/// instruction.
std::string render_pseudocode(const EAProgram& program);

/// Program file:
///   EEA v1
///   registers <N>
///   generations <G>
///   <one instruction per line>
std::string serialize_program(const EAProgram& program);

/// Accepts both the program file format and the pseudo-code listing.
EAProgram parse_program(std::string_view text);

} // namespace eea
