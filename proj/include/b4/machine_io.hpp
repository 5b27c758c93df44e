/* machine_io.hpp -- the line-oriented machine description format.
 *
 *     machine <name>
 *     input <letter> <letter> ...
 *     output <letter> <letter> ...      (optional; defaults to input)
 *     states <id> <id> ...
 *     start <id>                        (optional)
 *     t <state> <in-letter> <out-letter> <next-state>
 *
 * Blank lines and '#' comments are ignored; any other directive is an error.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "b4/mealy.hpp"

namespace b4 {

/// A machine as it appears in a description file: the start state is optional.
struct MachineFile {
    MealyMachine machine;
    std::optional<StateIndex> start;

    /// Throws Error when the file has no start state.
    InitialMachine initial() const;
};

MachineFile parse_machine(std::string_view text);
std::string format_machine(const MealyMachine& machine, std::optional<StateIndex> start = std::nullopt);
std::string format_machine(const InitialMachine& machine);

MachineFile load_machine(const std::filesystem::path& path);
void save_machine(const std::filesystem::path& path, const std::string& text);

}  // namespace b4
