// Builds the HIGH membership ramp, scales it by one half, and prints both
// curves as CSV. Scaling by lambda <= 1 squares toward zero, so the scaled
// set is the more selective one.

#include <cstdio>

#include "mnesor/shapes.hpp"

int main() {
    using namespace mnesor;
    const SampledFuzzySet high = Shape::ramp_up(10, 16).sample(0, 30, 31);
    const SampledFuzzySet tighter = scale(high, 0.5);

    std::printf("x,HIGH,HIGH*0.5\n");
    for (int i = 0; i < high.carrier().n(); ++i)
        std::printf("%.9g,%.9g,%.9g\n", high.carrier().coordinate(i), high[i].value(), tighter[i].value());
    return 0;
}
