# Modelo/Anillo.py

from enum import Enum
from typing import Tuple
from pydantic import BaseModel, Field, field_validator, model_validator

# Exponente máximo soportado: las imágenes binarias miden 2^(k-1)
K_MAXIMO = 16


class Metrica(str, Enum):
    HAMMING = "hamming"
    LEE = "lee"
    HOMOGENEA = "homogeneous"


class Modulo(BaseModel):
    """Módulo m = 2^k de un anillo de residuos Z_m."""

    model_config = {"frozen": True}

    k: int = Field(..., ge=1, le=K_MAXIMO, description="Exponente con m = 2^k")

    @property
    def m(self) -> int:
        return 1 << self.k

    @classmethod
    def desde_m(cls, m: int) -> "Modulo":
        if m < 2 or m & (m - 1):
            raise ValueError(f"El módulo {m} no es una potencia de dos mayor que 1")
        return cls(k=m.bit_length() - 1)

    def __str__(self) -> str:
        return f"Z{self.m}"


class PalabraAnillo(BaseModel):
    """Palabra (x_1, ..., x_n) sobre Z_m. La longitud 0 sólo sirve como neutro de la concatenación."""

    model_config = {"frozen": True}

    modulo: Modulo
    valores: Tuple[int, ...]

    @model_validator(mode="after")
    def _validar_rango(self) -> "PalabraAnillo":
        m = self.modulo.m
        for i, x in enumerate(self.valores):
            if not 0 <= x < m:
                raise ValueError(f"El componente {i} = {x} no está en [0, {m})")
        return self

    def __len__(self) -> int:
        return len(self.valores)

    @classmethod
    def cero(cls, modulo: Modulo, n: int) -> "PalabraAnillo":
        return cls(modulo=modulo, valores=(0,) * n)

    @classmethod
    def desde_texto(cls, texto: str, modulo: Modulo) -> "PalabraAnillo":
        """Interpreta la forma textual '6,6,6'."""
        texto = texto.strip()
        if not texto:
            raise ValueError("Palabra vacía")
        try:
            valores = tuple(int(parte.strip()) for parte in texto.split(","))
        except ValueError:
            raise ValueError(f"Palabra mal formada: '{texto}'") from None
        return cls(modulo=modulo, valores=valores)

    def texto(self) -> str:
        return ",".join(str(x) for x in self.valores)

    def concatenar(self, otra: "PalabraAnillo") -> "PalabraAnillo":
        if otra.modulo != self.modulo:
            raise ValueError(f"Módulos distintos: {self.modulo} y {otra.modulo}")
        return PalabraAnillo(modulo=self.modulo, valores=self.valores + otra.valores)


class PalabraBinaria(BaseModel):
    """Palabra sobre F_2, p. ej. el listado de valores de una función booleana."""

    model_config = {"frozen": True}

    bits: Tuple[int, ...]

    @field_validator("bits")
    @classmethod
    def _validar_bits(cls, bits: Tuple[int, ...]) -> Tuple[int, ...]:
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"El componente {i} = {b} no es un bit")
        return bits

    def __len__(self) -> int:
        return len(self.bits)

    @classmethod
    def desde_texto(cls, texto: str) -> "PalabraBinaria":
        """Interpreta la forma textual contigua '0110'."""
        texto = texto.strip()
        if not texto or any(c not in "01" for c in texto):
            raise ValueError(f"Palabra binaria mal formada: '{texto}'")
        return cls(bits=tuple(int(c) for c in texto))

    def texto(self) -> str:
        return "".join(str(b) for b in self.bits)

    def concatenar(self, otra: "PalabraBinaria") -> "PalabraBinaria":
        return PalabraBinaria(bits=self.bits + otra.bits)

    def como_palabra_anillo(self) -> PalabraAnillo:
        return PalabraAnillo(modulo=Modulo(k=1), valores=self.bits)


class ExpansionBinaria(BaseModel):
    """Bits u_1..u_k de la expansión 2-ádica, el menos significativo primero."""

    model_config = {"frozen": True}

    bits: Tuple[int, ...]

    @field_validator("bits")
    @classmethod
    def _validar_bits(cls, bits: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(b not in (0, 1) for b in bits):
            raise ValueError("La expansión sólo admite bits 0/1")
        return bits

    def valor(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    def bit(self, i: int) -> int:
        """u_i con índice 1-based, como en la notación habitual."""
        return self.bits[i - 1]
