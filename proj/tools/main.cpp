#include "lubridrag/cli.hpp"

int main(int argc, char** argv) {
    return lubridrag::cli::run(argc, argv);
}
