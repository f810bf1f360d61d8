#include "selfdesc/cli.hpp"

int main(int argc, char** argv) {
    return selfdesc::cli::run(argc, argv);
}
