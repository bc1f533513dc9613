#include "cli_app.hpp"

int main(int argc, char** argv) { return congh1::cli::run(argc, argv); }
