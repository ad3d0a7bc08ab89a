#include "hmkit/cli.hpp"

int main(int argc, char** argv) { return hmkit::cli_main(argc, argv); }
