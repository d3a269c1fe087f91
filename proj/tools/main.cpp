#include "spinhurwitz/cli_app.hpp"

int main(int argc, char** argv) { return spinhurwitz::run_cli(argc, argv); }
