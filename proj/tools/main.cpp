#include "frucht/cli.hpp"

int main(int argc, char** argv) { return frucht::cli::run(argc, argv); }
