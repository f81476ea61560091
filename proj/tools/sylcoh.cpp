#include <sylcoh/cli.hpp>

int main(int argc, char** argv) { return sylcoh::run_cli(argc, argv); }
