# Modelo/Mapa.py

from enum import Enum
from typing import Optional
from pydantic import BaseModel, Field, model_validator
from Modelo.Anillo import K_MAXIMO, Metrica, Modulo, PalabraBinaria


class NombreMapa(str, Enum):
    PHI = "phi"
    PHI_INVERSA = "phi-inv"
    PSI = "psi"
    COMPUESTO = "composed"


class TipoMapa(BaseModel):
    """
    Identifica una de las isometrías de Gray:
      - phi:      Z4 -> F2^2
      - phi-inv:  F2^2 -> Z4
      - psi(k):   Z_{2^k} -> F2^(2^(k-1)),  k >= 2
      - composed(k): phi^-1 psi, Z_{2^k} -> Z4^(2^(k-2)),  k >= 3
    """

    model_config = {"frozen": True}

    nombre: NombreMapa
    k: Optional[int] = Field(default=None, le=K_MAXIMO)

    @model_validator(mode="after")
    def _validar_k(self) -> "TipoMapa":
        if self.nombre in (NombreMapa.PHI, NombreMapa.PHI_INVERSA):
            if self.k not in (None, 2):
                raise ValueError(f"'{self.nombre.value}' no admite k={self.k}")
        elif self.nombre == NombreMapa.PSI:
            if self.k is None or self.k < 2:
                raise ValueError("psi requiere k >= 2")
        elif self.k is None or self.k < 3:
            raise ValueError("composed requiere k >= 3")
        return self

    # --- Constructores de conveniencia ---

    @classmethod
    def phi(cls) -> "TipoMapa":
        return cls(nombre=NombreMapa.PHI)

    @classmethod
    def phi_inversa(cls) -> "TipoMapa":
        return cls(nombre=NombreMapa.PHI_INVERSA)

    @classmethod
    def psi(cls, k: int) -> "TipoMapa":
        return cls(nombre=NombreMapa.PSI, k=k)

    @classmethod
    def compuesto(cls, k: int = 3) -> "TipoMapa":
        return cls(nombre=NombreMapa.COMPUESTO, k=k)

    # --- Dominio e imagen ---

    @property
    def modulo_dominio(self) -> Modulo:
        if self.nombre == NombreMapa.PHI:
            return Modulo(k=2)
        if self.nombre == NombreMapa.PHI_INVERSA:
            return Modulo(k=1)
        return Modulo(k=self.k)

    @property
    def modulo_imagen(self) -> Modulo:
        if self.nombre in (NombreMapa.PHI_INVERSA, NombreMapa.COMPUESTO):
            return Modulo(k=2)
        return Modulo(k=1)

    @property
    def simbolos_entrada(self) -> int:
        """Componentes del dominio que forman un símbolo (phi-inv lee pares de bits)."""
        return 2 if self.nombre == NombreMapa.PHI_INVERSA else 1

    @property
    def simbolos_salida(self) -> int:
        if self.nombre == NombreMapa.PHI:
            return 2
        if self.nombre == NombreMapa.PHI_INVERSA:
            return 1
        if self.nombre == NombreMapa.PSI:
            return 1 << (self.k - 1)
        return 1 << (self.k - 2)

    @property
    def metrica_origen(self) -> Metrica:
        return {
            NombreMapa.PHI: Metrica.LEE,
            NombreMapa.PHI_INVERSA: Metrica.HAMMING,
        }.get(self.nombre, Metrica.HOMOGENEA)

    @property
    def metrica_destino(self) -> Metrica:
        if self.nombre in (NombreMapa.PHI_INVERSA, NombreMapa.COMPUESTO):
            return Metrica.LEE
        return Metrica.HAMMING

    def etiqueta(self) -> str:
        if self.k is None:
            return self.nombre.value
        return f"{self.nombre.value}(k={self.k})"


class ListadoFuncionBooleana(BaseModel):
    """Valores de una función booleana sobre F2^(k-1), con y_1 variando más rápido."""

    model_config = {"frozen": True}

    k: int = Field(..., ge=2, le=K_MAXIMO)
    valores: PalabraBinaria

    @model_validator(mode="after")
    def _validar_longitud(self) -> "ListadoFuncionBooleana":
        esperado = 1 << (self.k - 1)
        if len(self.valores) != esperado:
            raise ValueError(f"El listado debe medir {esperado}, mide {len(self.valores)}")
        return self
