#include "lq/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return lq::dispatch(argc, argv, std::cout, std::cerr); }
