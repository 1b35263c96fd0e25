# Modelo/Verificacion.py

from pydantic import BaseModel


class Chequeo(BaseModel):
    model_config = {"frozen": True}

    nombre: str
    ok: bool
    detalle: str = ""

    def __repr__(self) -> str:
        estado = "OK" if self.ok else "FALLA"
        return f"<Chequeo {self.nombre} {estado}>"
