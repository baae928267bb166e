#include "pvoros/cli.hpp"

int main(int argc, char** argv) {
    return pvoros::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
