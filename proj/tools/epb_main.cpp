#include <string>
#include <vector>

#include "epb/cli.hpp"

int main(int argc, char** argv) {
    return epb::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
