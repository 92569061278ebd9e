// placeholder; full CLI wired after the library layers are in place
#include <cstdio>
int main() {
    std::puts("branchdiv: CLI not built yet");
    return 1;
}
