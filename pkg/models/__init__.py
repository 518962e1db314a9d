# Módulo de modelos de dados