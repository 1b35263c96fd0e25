#!/usr/bin/python
# -*- coding: utf-8 -*-

import os
from pathlib import Path
from dotenv import load_dotenv

# -------------------------------------------------------
# Localiza el archivo .env opcional que está dentro de /config
# -------------------------------------------------------

BASE_DIR = Path(__file__).resolve().parent
ENV_PATH = BASE_DIR / ".env"

# -------------------------------------------------------
# Cargar variables del .env usando python-dotenv (si existe)
# -------------------------------------------------------
if ENV_PATH.exists():
    load_dotenv(dotenv_path=ENV_PATH)

# -------------------------------------------------------
# Clase unificada de configuración
# -------------------------------------------------------
class Config:
    # ----------- Enumeración de códigos -----------
    # Máximo de palabras de información (m^k) que se recorren al enumerar
    CAPACIDAD_ENUMERACION = int(os.getenv("GRAY_CAPACIDAD_ENUMERACION", str(1 << 24)))

    # ----------- Verificación -----------------
    SEMILLA = int(os.getenv("GRAY_SEMILLA", "2024"))
    MATRICES_ALEATORIAS = int(os.getenv("GRAY_MATRICES_ALEATORIAS", "50"))

    # ----------- Logging -----------------
    LOG_LEVEL = os.getenv("GRAY_LOG_LEVEL", "WARNING").upper()
