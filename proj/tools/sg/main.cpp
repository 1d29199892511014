#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return sgcli::run(argc, argv, std::cout, std::cerr); }
