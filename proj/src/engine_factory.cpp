#include "orient/engine.hpp"
#include "orient/engine_amortized.hpp"
#include "orient/engine_basic.hpp"
#include "orient/engine_worstcase.hpp"

namespace orient {

std::unique_ptr<Engine> make_engine(EngineKind kind, const Parameters& params) {
    switch (kind) {
        case EngineKind::basic: return std::make_unique<BasicEngine>(params);
        case EngineKind::worstcase: return std::make_unique<WorstCaseEngine>(params);
        case EngineKind::amortized: return std::make_unique<AmortizedEngine>(params);
    }
    return nullptr;
}

}  // namespace orient
