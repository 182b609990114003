#include "dzeta/cli.hpp"

int main(int argc, char** argv) { return dzeta::cli::run(argc, argv); }
