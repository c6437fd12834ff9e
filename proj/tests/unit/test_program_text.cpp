#include <doctest.h>

#include "eea/program_text.hpp"

using namespace eea;

namespace {

std::size_t error_line(std::string_view text)
{
    try {
        parse_program(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("instructions print in the listing style")
{
    CHECK(format_instruction({ Opcode::Mutate, 0, 5, 0 }) == "Pop[0] = Mutate(Pop[5]);");
    CHECK(format_instruction({ Opcode::Select, 7, 3, 6 }) == "Pop[7] = Select(Pop[3], Pop[6]);");
    CHECK(format_instruction({ Opcode::Crossover, 1, 2, 3 }) == "Pop[1] = Crossover(Pop[2], Pop[3]);");
}

TEST_CASE("parse_instruction tolerates whitespace")
{
    CHECK(parse_instruction("  Pop [ 7 ]=Select( Pop[3] ,Pop[ 6 ] ) ;  ") == Instruction { Opcode::Select, 7, 3, 6 });
    CHECK(parse_instruction("Pop[0] = Mutate(Pop[5]);") == Instruction { Opcode::Mutate, 0, 5, 0 });
    CHECK_THROWS_AS(parse_instruction("Pop[0] = Mutate(Pop[5], Pop[1]);"), ParseError);
    CHECK_THROWS_AS(parse_instruction("Pop[0] = Select(Pop[5]);"), ParseError);
}

TEST_CASE("render_pseudocode layout")
{
    const EAProgram p { { { Opcode::Mutate, 0, 5, 0 }, { Opcode::Select, 7, 3, 6 } }, 8, 100 };
    CHECK(render_pseudocode(p)
          == "void LGP_Program(Chromosome Pop[8])\n"
             "{\n"
             "    Randomly_initialize_the_population();\n"
             "    for (int k = 0; k < 100; k++) {\n"
             "        Pop[0] = Mutate(Pop[5]);\n"
             "        Pop[7] = Select(Pop[3], Pop[6]);\n"
             "    }\n"
             "}\n");
}

TEST_CASE("program file and listing round-trip")
{
    Rng rng(17);
    MacroConfig cfg;
    cfg.code_length = 40;
    for (int t = 0; t < 100; ++t) {
        const EAProgram p = random_program(cfg, 2 + rng.index(50), rng.index(300), rng);
        CHECK(parse_program(serialize_program(p)) == p);
        CHECK(parse_program(render_pseudocode(p)) == p);
    }
}

TEST_CASE("program file format")
{
    const EAProgram p { { { Opcode::Crossover, 1, 0, 2 } }, 3, 7 };
    CHECK(serialize_program(p) == "EEA v1\nregisters 3\ngenerations 7\nPop[1] = Crossover(Pop[0], Pop[2]);\n");
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(error_line("EEA v1\nregisters 4\ngenerations 10\nPop[0] = Mutate(Pop[1]);\nPop[1] = Swap(Pop[0], Pop[2]);\n") == 5);
    CHECK(error_line("EEA v1\nregisters 4\ngenerations 10\n\nPop[9] = Mutate(Pop[1]);\n") == 5);
    CHECK(error_line("EEA v1\nregisters four\n") == 2);
    CHECK(error_line("EEA v1\nregisters 1\ngenerations 3\n") == 2);
    CHECK(error_line("EEA v1\nregisters 4\nrounds 3\n") == 3);
    CHECK(error_line("void LGP_Program(Chromosome Pop[4])\n{\n    for (int k = 0; k < 5; k++) {\n        Pop[0] = Cross(Pop[1], Pop[2]);\n") == 4);

    try {
        parse_program("EEA v1\nregisters 4\ngenerations 10\nPop[1] = Swap(Pop[0], Pop[2]);\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
        CHECK(std::string(e.what()).find("Swap") != std::string::npos);
    }
}
