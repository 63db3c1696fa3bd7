#include "evotrans/cli.hpp"

int main(int argc, char** argv) {
    return evotrans::cli::run(argc, argv);
}
