#include "orbicoh/cli.hpp"

int main(int argc, char** argv) { return orbicoh::run(argc, argv); }
