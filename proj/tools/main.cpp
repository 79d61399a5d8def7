#include <ddrc/cli.hpp>

int main(int argc, char** argv) { return ddrc::cli::run(argc, argv); }
