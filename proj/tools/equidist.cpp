#include "equidist/cli.hpp"

int main(int argc, char** argv) {
    return equidist::cli::dispatch({argv + 1, argv + argc});
}
