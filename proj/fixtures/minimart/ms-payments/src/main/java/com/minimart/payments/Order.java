package com.minimart.payments;

import java.math.BigDecimal;
import java.util.UUID;
import lombok.Data;

@Data
public class Order {
    private UUID id;
    private BigDecimal total;
}
