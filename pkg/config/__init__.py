# Módulo de configurações