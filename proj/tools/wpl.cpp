#include <iostream>
#include <string>
#include <vector>

#include <wpl/cli.hpp>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    wpl::cli::Command cmd;
    try {
        cmd = wpl::cli::parse_args(args);
    } catch (const wpl::cli::help_requested& h) {
        std::cout << h.what();
        return wpl::cli::exit_ok;
    } catch (const wpl::cli::usage_error& e) {
        std::cerr << "wpl: " << e.what() << "\nRun 'wpl --help' for usage.\n";
        return wpl::cli::exit_usage;
    }
    const wpl::cli::Result r = wpl::cli::run(cmd);
    std::cout << r.output;
    return r.exit_code;
}
