import extkit.catalog.services.catalog_service.listeners  # noqa
