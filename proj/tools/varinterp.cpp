#include <varinterp/cli.hpp>

int main(int argc, char** argv) { return varinterp::cli::run(argc, argv); }
