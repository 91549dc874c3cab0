#include "abfold/cli.hpp"

int main(int argc, char** argv)
{
    return abfold::cli_main(argc, argv);
}
