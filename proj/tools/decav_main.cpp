// decav — digit averages of real numbers, exact where possible and
// empirical where not.  All interesting logic lives in decav::core; this
// file only maps outcomes onto the process exit-code contract:
//   0 success, 1 computation error, 2 usage error, 3 I/O error.
#include <exception>
#include <iostream>
#include <vector>

#include "decav/report.hpp"
#include "decav/run_config.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    decav::RunConfig config;
    try {
        config = decav::parse_args(args);
    } catch (const decav::help_requested& h) {
        std::cout << h.what();
        return 0;
    } catch (const decav::usage_error& e) {
        std::cerr << "decav: " << e.what() << '\n';
        std::cerr << "run 'decav --help' for usage\n";
        return 2;
    }

    try {
        std::string bytes = decav::run_to_string(config);
        std::cout << bytes;
        if (config.progress && config.prefix)
            std::cerr << "decav: consumed " << *config.prefix << " digits\n";
        return 0;
    } catch (const decav::io_error& e) {
        std::cerr << "decav: " << e.what() << '\n';
        return 3;
    } catch (const decav::decode_error& e) {
        std::cerr << "decav: " << e.what() << '\n';
        return 3;
    } catch (const decav::truncation_error& e) {
        std::cerr << "decav: " << e.what() << '\n';
        return 3;
    } catch (const decav::partial_result_error& e) {
        std::cerr << "decav: " << e.what() << '\n';
        // A consume aborted by a corrupt or short source is an I/O failure;
        // the cause travels as the nested exception.
        try {
            std::rethrow_if_nested(e);
        } catch (const decav::decode_error&) {
            return 3;
        } catch (const decav::truncation_error&) {
            return 3;
        } catch (const decav::io_error&) {
            return 3;
        } catch (...) {
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "decav: " << e.what() << '\n';
        return 1;
    }
}
