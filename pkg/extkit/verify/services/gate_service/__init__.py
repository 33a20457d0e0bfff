import extkit.verify.services.gate_service.listeners  # noqa
