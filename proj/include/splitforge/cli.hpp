#ifndef SPLITFORGE_CLI_HPP
#define SPLITFORGE_CLI_HPP

namespace splitforge {

// Command dispatch for the splitforge tool. Exit codes: 0 success/verified,
// 1 usage, 2 input error (parse or hypotheses), 3 verification failure,
// 4 factorization timeout.
int run(int argc, char** argv);

}  // namespace splitforge

#endif
