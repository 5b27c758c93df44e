#include "b4/machine_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace b4 {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;) words.push_back(std::move(w));
    return words;
}

Letter single_letter(const std::string& token, std::size_t line) {
    if (token.size() != 1)
        throw ParseError("line " + std::to_string(line) + ": letters are single symbols, got '" + token + "'");
    return token[0];
}

std::string letters_of(const std::vector<std::string>& words, std::size_t line) {
    std::string letters;
    for (std::size_t i = 1; i < words.size(); ++i) letters += single_letter(words[i], line);
    return letters;
}

}  // namespace

InitialMachine MachineFile::initial() const {
    if (!start) throw Error("machine '" + machine.name() + "' has no start state");
    return InitialMachine(machine, *start);
}

MachineFile parse_machine(std::string_view text) {
    std::optional<std::string> name, input, output, start;
    std::optional<std::vector<std::string>> states;
    std::vector<Transition> rows;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto words = split_words(line);
        if (words.empty()) continue;

        const std::string& directive = words[0];
        const std::string where = "line " + std::to_string(line_no) + ": ";
        auto once = [&](const auto& slot) {
            if (slot) throw ParseError(where + "duplicate '" + directive + "' directive");
        };
        if (directive == "machine") {
            once(name);
            if (words.size() != 2) throw ParseError(where + "expected 'machine <name>'");
            name = words[1];
        } else if (directive == "input") {
            once(input);
            input = letters_of(words, line_no);
        } else if (directive == "output") {
            once(output);
            output = letters_of(words, line_no);
        } else if (directive == "states") {
            once(states);
            states.emplace(words.begin() + 1, words.end());
        } else if (directive == "start") {
            once(start);
            if (words.size() != 2) throw ParseError(where + "expected 'start <id>'");
            start = words[1];
        } else if (directive == "t") {
            if (words.size() != 5)
                throw ParseError(where + "expected 't <state> <in-letter> <out-letter> <next-state>'");
            rows.push_back({words[1], single_letter(words[2], line_no), single_letter(words[3], line_no), words[4]});
        } else {
            throw ParseError(where + "unknown directive '" + directive + "'");
        }
    }
    if (!name) throw ParseError("missing 'machine' directive");
    if (!input) throw ParseError("missing 'input' directive");
    if (!states) throw ParseError("missing 'states' directive");

    try {
        MealyMachine machine(*name, Alphabet(*input), Alphabet(output ? *output : *input), *states, rows);
        std::optional<StateIndex> q0;
        if (start) q0 = machine.state_index(*start);
        return MachineFile{std::move(machine), q0};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("invalid machine: ") + e.what());
    }
}

std::string format_machine(const MealyMachine& machine, std::optional<StateIndex> start) {
    std::ostringstream out;
    auto letters = [&](const Alphabet& a) {
        for (Letter c : a.letters()) out << ' ' << c;
        out << '\n';
    };
    out << "machine " << machine.name() << '\n';
    out << "input";
    letters(machine.input());
    out << "output";
    letters(machine.output());
    out << "states";
    for (const auto& id : machine.states()) out << ' ' << id;
    out << '\n';
    if (start) out << "start " << machine.state_id(*start) << '\n';
    for (const auto& t : machine.transitions())
        out << "t " << t.from << ' ' << t.input << ' ' << t.output << ' ' << t.to << '\n';
    return out.str();
}

std::string format_machine(const InitialMachine& machine) {
    return format_machine(machine.machine(), machine.start());
}

MachineFile load_machine(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open machine file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_machine(text.str());
}

void save_machine(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write machine file '" + path.string() + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace b4
