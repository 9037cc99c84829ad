#include "xxchain/scan.hpp"

int main(int argc, char** argv) { return xxchain::cli_main(argc, argv); }
