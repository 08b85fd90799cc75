#include "splitforge/cli.hpp"

int main(int argc, char** argv) { return splitforge::run(argc, argv); }
