#include <iostream>
#include <thread>

#include "affgk/acceptance.hpp"

int main()
{
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads > 8) threads = 8;
    auto results = affgk::acceptance::run_all(&std::cout, threads);
    bool ok = affgk::acceptance::all_pass(results);
    std::cout << (ok ? "all criteria passed" : "FAILURES above") << std::endl;
    return ok ? 0 : 1;
}
