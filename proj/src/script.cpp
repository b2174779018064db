// script engine; filled in after the math modules are proven
