#include "eea/program_text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "eea/error.hpp"

namespace eea {

namespace {

constexpr std::string_view kMagic = "EEA v1";

std::string_view opcode_name(Opcode op)
{
    switch (op) {
    case Opcode::Select: return "Select";
    case Opcode::Crossover: return "Crossover";
    case Opcode::Mutate: return "Mutate";
    }
    return "?";
}

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) { out.push_back(c); }
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) { s.remove_prefix(1); }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) { s.remove_suffix(1); }
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) { lines.push_back(text.substr(start)); }
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Cursor over a whitespace-free instruction string.
class Scanner {
public:
    Scanner(std::string_view text, std::size_t line_no) : text_(text), line_(line_no) { }

    void expect(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token) {
            fail("expected '" + std::string(token) + "'");
        }
        pos_ += token.size();
    }

    bool accept(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    std::uint32_t number()
    {
        std::uint32_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc {} || ptr == first) {
            fail("expected a register index");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::uint32_t register_ref()
    {
        expect("Pop[");
        const std::uint32_t idx = number();
        expect("]");
        return idx;
    }

    std::string_view identifier()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) { ++pos_; }
        return text_.substr(start, pos_ - start);
    }

    void finish()
    {
        if (pos_ != text_.size()) { fail("unexpected trailing text"); }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what + " in '" + std::string(text_) + "'"); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

std::size_t parse_count(std::string_view value, std::size_t line_no, std::string_view key)
{
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc {} || ptr != value.data() + value.size()) {
        throw ParseError(line_no, "invalid value for '" + std::string(key) + "': '" + std::string(value) + "'");
    }
    return out;
}

// "registers 40" -> 40, whitespace tolerant.
std::size_t parse_header(std::string_view line, std::string_view key, std::size_t line_no)
{
    line = trim(line);
    if (line.substr(0, key.size()) != key) {
        throw ParseError(line_no, "expected '" + std::string(key) + " <count>'");
    }
    return parse_count(trim(line.substr(key.size())), line_no, key);
}

void check_registers(const EAProgram& program, const Instruction& ins, std::size_t line_no)
{
    if (ins.dest >= program.num_registers || ins.src1 >= program.num_registers || ins.src2 >= program.num_registers) {
        throw ParseError(line_no, "register index out of range for " + std::to_string(program.num_registers) + " registers");
    }
}

EAProgram parse_program_file(const std::vector<std::string_view>& lines, std::size_t magic_line)
{
    EAProgram program;
    std::size_t i = magic_line + 1;

    auto next_content_line = [&]() -> std::size_t {
        while (i < lines.size() && trim(lines[i]).empty()) { ++i; }
        if (i >= lines.size()) {
            throw ParseError(lines.size(), "unexpected end of program file");
        }
        return i++;
    };

    const std::size_t registers_at = next_content_line();
    program.num_registers = parse_header(lines[registers_at], "registers", registers_at + 1);
    if (program.num_registers < 2) {
        throw ParseError(registers_at + 1, "a program needs at least 2 registers");
    }
    const std::size_t generations_at = next_content_line();
    program.micro_generations = parse_header(lines[generations_at], "generations", generations_at + 1);

    for (; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) { continue; }
        const Instruction ins = parse_instruction(lines[i], i + 1);
        check_registers(program, ins, i + 1);
        program.code.push_back(ins);
    }
    return program;
}

// Listing produced by render_pseudocode.
EAProgram parse_listing(const std::vector<std::string_view>& lines)
{
    EAProgram program;
    bool have_registers = false;
    bool have_generations = false;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string compact = strip_spaces(lines[i]);
        const std::size_t line_no = i + 1;
        if (compact.empty() || compact == "{" || compact == "}" || compact == "Randomly_initialize_the_population();") {
            continue;
        }
        if (compact.starts_with("void")) {
            const auto open = compact.find("Pop[");
            const auto close = compact.find(']', open);
            if (open == std::string::npos || close == std::string::npos) {
                throw ParseError(line_no, "missing population size in program header");
            }
            program.num_registers = parse_count(std::string_view(compact).substr(open + 4, close - open - 4), line_no, "Pop");
            have_registers = true;
            continue;
        }
        if (compact.starts_with("for(")) {
            const auto lt = compact.find('<');
            const auto semi = compact.find(';', lt);
            if (lt == std::string::npos || semi == std::string::npos) {
                throw ParseError(line_no, "malformed generation loop header");
            }
            program.micro_generations = parse_count(std::string_view(compact).substr(lt + 1, semi - lt - 1), line_no, "generations");
            have_generations = true;
            continue;
        }
        if (!have_registers || !have_generations) {
            throw ParseError(line_no, "instruction before the program header");
        }
        const Instruction ins = parse_instruction(lines[i], line_no);
        check_registers(program, ins, line_no);
        program.code.push_back(ins);
    }
    if (!have_registers || !have_generations) {
        throw ParseError(0, "not a program listing: missing header or generation loop");
    }
    return program;
}

} // namespace

std::string format_instruction(const Instruction& ins)
{
    std::ostringstream out;
    out << "Pop[" << ins.dest << "] = " << opcode_name(ins.op) << "(Pop[" << ins.src1 << "]";
    if (ins.op != Opcode::Mutate) {
        out << ", Pop[" << ins.src2 << "]";
    }
    out << ");";
    return out.str();
}

Instruction parse_instruction(std::string_view line, std::size_t line_no)
{
    const std::string compact = strip_spaces(line);
    Scanner scan(compact, line_no);

    Instruction ins;
    ins.dest = scan.register_ref();
    scan.expect("=");
    const std::string_view name = scan.identifier();
    if (name == "Select") {
        ins.op = Opcode::Select;
    } else if (name == "Crossover") {
        ins.op = Opcode::Crossover;
    } else if (name == "Mutate") {
        ins.op = Opcode::Mutate;
    } else {
        throw ParseError(line_no, "unknown opcode '" + std::string(name) + "'");
    }
    scan.expect("(");
    ins.src1 = scan.register_ref();
    if (ins.op != Opcode::Mutate) {
        scan.expect(",");
        ins.src2 = scan.register_ref();
    }
    scan.expect(")");
    scan.accept(";");
    scan.finish();
    return ins;
}

std::string render_pseudocode(const EAProgram& program)
{
    std::ostringstream out;
    out << "void LGP_Program(Chromosome Pop[" << program.num_registers << "])\n";
    out << "{\n";
    out << "    Randomly_initialize_the_population();\n";
    out << "    for (int k = 0; k < " << program.micro_generations << "; k++) {\n";
    for (const auto& ins : program.code) {
        out << "        " << format_instruction(ins) << '\n';
    }
    out << "    }\n";
    out << "}\n";
    return out.str();
}

std::string serialize_program(const EAProgram& program)
{
    std::ostringstream out;
    out << kMagic << '\n';
    out << "registers " << program.num_registers << '\n';
    out << "generations " << program.micro_generations << '\n';
    for (const auto& ins : program.code) {
        out << format_instruction(ins) << '\n';
    }
    return out.str();
}

EAProgram parse_program(std::string_view text)
{
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string_view line = trim(lines[i]);
        if (line.empty()) { continue; }
        if (strip_spaces(line) == strip_spaces(kMagic)) {
            return parse_program_file(lines, i);
        }
        break;
    }
    return parse_listing(lines);
}

} // namespace eea
